#include "mtc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace mtc::channel {
namespace {

void validate(const ChannelSpec& spec) {
  if (!(spec.d > 0.0)) throw std::invalid_argument("ChannelSpec: d must be positive");
  switch (spec.system) {
    case System::A:
    case System::B:
      if (!(spec.D > 0.0))
        throw std::invalid_argument("ChannelSpec: D must be positive");
      break;
    case System::C:
      if (!(spec.D_a > 0.0) || !(spec.D_b > 0.0))
        throw std::invalid_argument("ChannelSpec: system C needs D_a and D_b");
      break;
  }
}

double levy_scale(double d, double D) { return d * d / (2.0 * D); }

double levy_draw(double c, const rng::Counter& ctr, std::uint64_t pair) {
  const double z = ctr.normal(pair);
  return c / (z * z);
}

}  // namespace

ChannelSpec ChannelSpec::make_a(double d, double D) {
  ChannelSpec s{System::A, d, D};
  validate(s);
  return s;
}
ChannelSpec ChannelSpec::make_b(double d, double D) {
  ChannelSpec s{System::B, d, D};
  validate(s);
  return s;
}
ChannelSpec ChannelSpec::make_c(double d, double D_a, double D_b) {
  ChannelSpec s{System::C, d, 0.0, D_a, D_b};
  validate(s);
  return s;
}

NoiseModel derive_noise(const ChannelSpec& spec) {
  validate(spec);
  switch (spec.system) {
    case System::A:
      return {stabledist::StableParams(0.0, levy_scale(spec.d, spec.D), 0.5, 1.0),
              System::A};
    case System::B:
      // c_B = 2 d^2 / D = 4 c_A, kept bit-exact as 4 * c_A.
      return {stabledist::StableParams(0.0, 4.0 * levy_scale(spec.d, spec.D),
                                       0.5, 0.0),
              System::B};
    case System::C: {
      const double ra = std::sqrt(spec.D_a);
      const double rb = std::sqrt(spec.D_b);
      const double c =
          spec.d * spec.d * (ra + rb) * (ra + rb) / (2.0 * spec.D_a * spec.D_b);
      const double beta = (ra - rb) / (ra + rb);
      return {stabledist::StableParams(0.0, c, 0.5, beta), System::C};
    }
  }
  throw std::logic_error("derive_noise: unreachable");
}

double cond_output_pdf(const ChannelSpec& spec, double input, double y) {
  return cond_output_pdf(derive_noise(spec), input, y);
}

double cond_output_pdf(const NoiseModel& noise, double input, double y) {
  const auto& p = noise.params;
  switch (noise.system) {
    case System::A:
      return stabledist::levy_pdf(y - input, p);
    case System::B: {
      if (input < 0.0)
        throw std::domain_error("cond_output_pdf: system B input must be >= 0");
      if (y < 0.0)
        throw std::domain_error("cond_output_pdf: system B observation must be >= 0");
      if (y == 0.0) return stabledist::pdf_half_sym(input, p.c);
      return stabledist::pdf_half_sym(y - input, p.c) +
             stabledist::pdf_half_sym(y + input, p.c);
    }
    case System::C:
      return stabledist::pdf_half_skew(y - input, p.c, p.beta);
  }
  throw std::logic_error("cond_output_pdf: unreachable");
}

double cond_output_log_pdf(const NoiseModel& noise, double input, double y) {
  if (noise.system == System::A)
    return stabledist::levy_log_pdf(y - input, noise.params);
  return std::log(cond_output_pdf(noise, input, y));
}

std::vector<double> simulate_output(const ChannelSpec& spec, double input,
                                    std::size_t n, rng::SeedSpec seed) {
  validate(spec);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    rng::Counter ctr(seed, i);
    out[i] = draw_output(spec, input, ctr, 0);
  }
  return out;
}

double draw_output(const ChannelSpec& spec, double input,
                   const rng::Counter& ctr, std::uint64_t pair_base) {
  switch (spec.system) {
    case System::A:
      return input + levy_draw(levy_scale(spec.d, spec.D), ctr, pair_base);
    case System::B: {
      const double c = levy_scale(spec.d, spec.D);
      const double t1 = levy_draw(c, ctr, pair_base);
      const double t2 = levy_draw(c, ctr, pair_base + 1);
      return std::fabs(input + t2 - t1);
    }
    case System::C: {
      const double ta = levy_draw(levy_scale(spec.d, spec.D_a), ctr, pair_base);
      const double tb =
          levy_draw(levy_scale(spec.d, spec.D_b), ctr, pair_base + 1);
      return input + tb - ta;
    }
  }
  throw std::logic_error("draw_output: unreachable");
}

}  // namespace mtc::channel
