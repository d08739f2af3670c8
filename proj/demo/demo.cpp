// Evaluates f(q) = q^2 + q e1 on a few points, then estimates its slice and
// global Lipschitz-type norms for w(t) = t^(1/2).

#include <iostream>

#include "slicereg.hpp"

int main() {
  using namespace slicereg;

  const SliceSeries f{Quat{}, kE1, Quat{1.0}};
  const ImaginaryUnit i = ImaginaryUnit::e3();

  for (const Quat& q : {Quat{0.5}, Quat{0.1, 0.2, -0.3, 0.4}, in_slice(0.3, 0.6, i)}) {
    std::cout << "f(" << q << ") = " << evaluate(f, q) << '\n';
  }

  const Majorant w = Majorant::power(0.5);
  const RegularityCertificate cert = check_regular(w);
  std::cout << w.describe() << ": " << to_string(cert.verdict) << ", C = " << cert.empirical_C << '\n';

  SamplePlan plan;
  plan.n_pairs = 4000;
  const NormEstimate slice = slice_norm(f, w, i, plan);
  const NormEstimate global = global_norm(f, w, plan);
  std::cout << "slice norm  ~ " << slice.value << "  (" << slice.samples_used << " pairs)\n";
  std::cout << "global norm ~ " << global.value << "  (" << global.samples_used << " pairs)\n";

  const Splitting s = split(f, i);
  const Seminorms n = seminorms_N(s.F, w, i, plan);
  std::cout << "N1, N2, N3 of the first component: " << n.N1 << ", " << n.N2 << ", " << n.N3 << '\n';
}
