#include "ans/formulas.hpp"

#include <string>

#include "ans/exception.hpp"

namespace ans {

  namespace {
    // Checked 64-bit arithmetic.
    class Count {
     public:
      constexpr Count(std::uint64_t v) : _v(v) {}  // NOLINT
      std::uint64_t value() const {
        return _v;
      }
      friend Count operator+(Count a, Count b) {
        std::uint64_t r;
        if (__builtin_add_overflow(a._v, b._v, &r)) {
          throw Error("count overflows 64 bits");
        }
        return r;
      }
      friend Count operator*(Count a, Count b) {
        std::uint64_t r;
        if (__builtin_mul_overflow(a._v, b._v, &r)) {
          throw Error("count overflows 64 bits");
        }
        return r;
      }

     private:
      std::uint64_t _v;
    };

    Count fact(std::size_t n) {
      Count out = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        out = out * i;
      }
      return out;
    }
  }  // namespace

  CountsTable counts(std::size_t n) {
    if (n == 0) {
      throw Error("counts are defined for n >= 1");
    }
    Count const m  = n;
    Count const f  = fact(n);
    Count const n2 = m * m;
    Count const n3 = n2 * m;
    Count const n4 = n3 * m;

    CountsTable t{};
    t.n         = n;
    t.aut_count = f.value();
    t.end_count = (f + m + 1).value();
    t.aff_count = ((f + 1) * n2 + 1).value();

    if (n == 1) {
      t.a_plus_total = 3;
      t.breakup      = {1, 1, 0, 1};
      // xi_theta < id < xi_(1,1) is a chain under +
      t.additive = {3, 3, 3, 3, 3, 3};
      // constants are right zeros, id is the identity
      t.multiplicative = {2, 3, 2, 3, 3, 3};
      return t;
    }

    t.a_plus_total = ((f + 1) * n2 + n4 + 1).value();
    t.breakup      = {n2.value(), (f * n2).value(), n4.value(), 1};

    t.additive.r           = (f * m + n3 + m + 1).value();
    t.additive.l           = (f * n2 + n3 + m + 1).value();
    t.additive.d           = (f * m + n2 + 2).value();
    t.additive.h           = t.a_plus_total;
    t.additive.idempotents = (n3 + m + 1).value();
    t.additive.regular     = (n4 + n2 + 1).value();

    t.multiplicative.r           = (n2 + m + 1).value();
    t.multiplicative.l           = (Count(2) * n2 + m + 1).value();
    t.multiplicative.d           = 3;
    t.multiplicative.h           = (n4 + Count(2) * n2 + 1).value();
    t.multiplicative.idempotents = (Count(2) * n2 + m + 1).value();
    t.multiplicative.regular     = t.a_plus_total;
    return t;
  }

}  // namespace ans
