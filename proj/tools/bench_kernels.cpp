// Compares the serial reference implementations of the oracle kernels with
// their OpenMP paths: derivation-matrix assembly, rational elimination
// inside the graded kernel computation, and batch evaluation of generator
// products.

#include "freealg/oracle.hpp"
#include "freealg/parallel.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace freealg;

namespace {

double seconds_of(const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void row(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-38s %10.3f s %10.3f s %8.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, equal ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int assembly_weight = 13;
  int kernel_weight = 9;
  int span_weight = 11;
  if (argc > 1) kernel_weight = std::stoi(argv[1]);

  std::printf("threads: %d\n", hardware_threads());
  std::printf("%-38s %12s %12s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    Derivation d = weitzenbock(1);
    auto words = words_of_weight(1, assembly_weight);
    std::vector<NCPoly> a, b;
    double ts = seconds_of([&] { a = assemble_images_serial(d, words); });
    double tp = seconds_of([&] { b = assemble_images_parallel(d, words); });
    row(("matrix assembly, m=1, N=" + std::to_string(assembly_weight)).c_str(), ts,
        tp, a == b);
  }

  {
    Derivation d = weitzenbock(1);
    KernelBasis a{{0, 0, {}}, {}}, b{{0, 0, {}}, {}};
    double ts =
        seconds_of([&] { a = graded_kernel_basis(d, 1, kernel_weight, false); });
    double tp =
        seconds_of([&] { b = graded_kernel_basis(d, 1, kernel_weight, true); });
    row(("graded kernel, m=1, N=" + std::to_string(kernel_weight)).c_str(), ts, tp,
        a.basis == b.basis);
  }

  {
    GeneratorTable table =
        enumerate_generators(1, {Rational(0), Rational(1)}, span_weight);
    std::size_t a = 0, b = 0;
    double ts = seconds_of([&] { a = span_dimension(table, span_weight, false); });
    double tp = seconds_of([&] { b = span_dimension(table, span_weight, true); });
    row(("span of products, m=1, N=" + std::to_string(span_weight)).c_str(), ts, tp,
        a == b);
  }

  return 0;
}
