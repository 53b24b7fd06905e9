#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "schubert/bp.hpp"
#include "schubert/parastab.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

enum class Verdict { Spherical, NotSpherical, Unknown };
std::string to_string(Verdict v);

// Complements in the standard labelling of a connected type, 0-based.
struct PairTableQuery {
  CartanType type;
  SimpleSubset Ic;
  SimpleSubset Jc;
};

struct TableMatch {
  bool accepted = false;
  int case_id = 0;       // 1-based case number of the table, 0 when rejected
  bool swapped = false;  // matched after exchanging I and J
};

TableMatch mwz_typeA_pair(const PairTableQuery& q);
TableMatch stembridge_typeD_pair(const PairTableQuery& q);

// Is the standard Levi with simple roots I spherical in the group of sys?
bool brundan_spherical_levi(const RootSystem& sys, const SimpleSubset& I);
bool brundan_spherical_levi(CartanType type, const SimpleSubset& I);

// One simple factor of a pair query.
struct FactorCheck {
  DynkinComponent component;
  SimpleSubset Ic;  // local labels
  SimpleSubset Jc;
  std::string table;  // "trivial", "mwz", "stembridge" or "none"
  TableMatch match;
};

// Is G_group / P_J a spherical L_I variety? Decided factor by factor over
// the components of `group`.
struct PairCheck {
  SimpleSubset group;
  SimpleSubset I;
  SimpleSubset J;
  bool accepted = false;
  std::vector<FactorCheck> factors;
};

PairCheck levi_pair_spherical(const RootSystem& sys, const SimpleSubset& group, const SimpleSubset& I,
                              const SimpleSubset& J);

bool toral_cell_test(const WeylElement& w);

struct MaximalParabolic {
  SimpleSubset J;
};
struct ToralCell {};
struct ChainBPFibration {
  BPDecomposition bp;
  int leaf;
  PairCheck pair;
};
struct EReduction {
  EKLIndex index;
  bool inverse;
};
enum class KempfVariant { Quotient, Right };
struct KempfTransfer {
  int alpha;
  KempfVariant variant;
  WeylElement target;
  std::optional<PairCheck> pair;  // quotient variant only
};
struct NegativeClassification {
  int node;
  PairCheck pair;
};
struct UnknownReason {};

using Reason =
    std::variant<MaximalParabolic, ToralCell, ChainBPFibration, EReduction, KempfTransfer, NegativeClassification,
                 UnknownReason>;

std::string reason_kind(const Reason& r);

struct SphericalCertificate {
  Verdict verdict;
  WeylElement element;
  LeviSupport levi;
  Reason reason;
  std::vector<SphericalCertificate> children;
};

struct DecideOptions {
  std::size_t cap = kDefaultCap;
};

SphericalCertificate decide_spherical(const WeylElement& w, const DecideOptions& opts = {});

// Re-derives every step of a certificate from scratch. Returns a
// description of the first failure, or nullopt when everything holds.
std::optional<std::string> recheck_certificate(const SphericalCertificate& c, std::size_t cap = kDefaultCap);

}  // namespace schubert
