#include "icf/kernels.hpp"

#include "icf/error.hpp"
#include "kernels_impl.hpp"

namespace icf::kernels {

namespace {

constexpr Table kScalar{Backend::scalar, scalar::edges, scalar::vertices, scalar::advance,
                        scalar::chord_row, scalar::scale};

#if defined(ICF_HAVE_AVX2)
constexpr Table kAvx2{Backend::avx2, avx2::edges, avx2::vertices, avx2::advance,
                      avx2::chord_row, avx2::scale};

bool cpu_has_avx2() noexcept {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif

}  // namespace

std::string_view name(Backend b) noexcept {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

const Table& table(Backend b) {
  switch (b) {
    case Backend::scalar: return kScalar;
    case Backend::avx2:
#if defined(ICF_HAVE_AVX2)
      if (cpu_has_avx2()) return kAvx2;
#endif
      break;
  }
  throw ParameterError("kernel backend '" + std::string(name(b)) + "' is not available");
}

std::vector<Backend> available() {
  std::vector<Backend> out{Backend::scalar};
#if defined(ICF_HAVE_AVX2)
  if (cpu_has_avx2()) out.push_back(Backend::avx2);
#endif
  return out;
}

const Table& active() {
  static const Table& t = table(available().back());
  return t;
}

}  // namespace icf::kernels
