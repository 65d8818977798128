// common.hpp : shared error type and exact rational scalar for the cochar library.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cochar {

// All linear algebra in this library runs over exact rationals.
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define COCHAR_CHECK(cond, msg)                                               \
    do {                                                                      \
        if (!(cond)) throw ::cochar::Error(std::string("cochar: ") + (msg)); \
    } while (0)

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline bool rat_is_int(const Rat& r) { return r.get_den() == 1; }

inline long rat_to_long(const Rat& r) {
    COCHAR_CHECK(rat_is_int(r), "expected integer rational, got " + rat_str(r));
    COCHAR_CHECK(r.get_num().fits_slong_p(), "integer out of range: " + rat_str(r));
    return r.get_num().get_si();
}

using IntVec = std::vector<long>;

}  // namespace cochar
