#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finalg/bounds.hpp"
#include "finalg/check_report.hpp"
#include "finalg/finite_group.hpp"

namespace finalg {

struct VerifyOptions {
  unsigned jobs = 1;
  Bounds bounds;
};

/// Holomorph realization table: 15 rows (c, n, ring); the c = 1 row is the
/// one-element ring, checked as a literal.
CheckReport verify_units_table(const VerifyOptions& opt = {});

/// Z_2[SL_2(F_3)]: A^8 = B^8 = 1 and all 64 ideals (A + x, B + y), x, y in Q_8,
/// identify two group elements. Case index = 8 * pos(x) + pos(y).
CheckReport verify_sl23_char2(const VerifyOptions& opt = {}, std::optional<Element> c = std::nullopt);

/// Z_4[SL_2(F_3)]: the two identities modulo (1 + i^2, 2r - 2), then 18 ideals
/// (1 + i^2, i + j + k + eps, x - v) with x = 1 + c + i, each non-injective and
/// containing every 2r - 2. Case index = 9 * pos(eps) + pos(v), eps in (1, -1),
/// v in identity then order-3 elements ascending. Two secondary sweeps are
/// informational.
CheckReport verify_sl23_char4(const VerifyOptions& opt = {}, std::optional<Element> c = std::nullopt);

/// Reruns the char-2 and char-4 sweeps with the first order-3 element outside
/// the conjugacy class of the default c and compares outcomes per case.
CheckReport verify_choice_independence(const VerifyOptions& opt = {});

CheckReport verify_sl_facts(const VerifyOptions& opt = {});

CheckReport verify_uc(const VerifyOptions& opt = {}, std::vector<std::uint64_t> qs = {3, 5, 7, 9, 11, 13});

/// Groups are built for q <= construct_max; larger q are checked arithmetically.
CheckReport verify_char0_obstruction(const VerifyOptions& opt = {},
                                     std::vector<std::uint64_t> qs = {3, 5, 7, 9, 11, 13, 17, 23, 31},
                                     std::uint64_t construct_max = 13);

/// Subgroup-level facts for n <= n_max, order and center for n <= n_center_max.
CheckReport verify_hol_facts(const VerifyOptions& opt = {}, std::uint64_t n_max = 16,
                             std::uint64_t n_center_max = 100);

CheckReport verify_theorem_neat(const VerifyOptions& opt = {}, std::uint64_t n_max = 100,
                                std::uint64_t n_iso_max = 24);

CheckReport verify_hurwitz(const VerifyOptions& opt = {});

CheckReport verify_agl1_remark(const VerifyOptions& opt = {});

/// Names accepted by run_check, in suite order.
const std::vector<std::string>& check_names();

/// Throws BadParameter for an unknown name.
CheckReport run_check(const std::string& name, const VerifyOptions& opt = {});

SuiteReport run_suite(const std::vector<std::string>& names, const VerifyOptions& opt = {});

}  // namespace finalg
