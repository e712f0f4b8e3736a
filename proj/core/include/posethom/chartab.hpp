#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posethom/permutation.hpp"
#include "posethom/qarith.hpp"
#include "posethom/series.hpp"

namespace posethom {

struct ConjugacyClass {
  std::string name;
  BigInt size;
  /// Cycle type of the class in the permutation action; needed for
  /// permutation characters.
  std::optional<Partition> cycle_type;
};

struct IrreducibleCharacter {
  std::string name;
  /// One value per class. Always filled.
  std::vector<std::complex<double>> values;
  /// Integer values, present iff the table is exact.
  std::vector<std::int64_t> exact;

  std::int64_t degree() const;
};

/// Conjugacy classes and irreducible characters of a finite group.
/// Tables with only integer values are exact and validated exactly; others
/// are complex floating point and validated to 1e-8.
struct CharacterTable {
  BigInt group_order;
  std::vector<ConjugacyClass> classes;
  std::vector<IrreducibleCharacter> irreducibles;
  bool exact = false;

  /// Index of the irreducible with this name; ArgumentError if absent.
  std::size_t find_irreducible(std::string_view name) const;
  /// Index of the identity class (cycle type 1^n, else the first class of size 1).
  std::size_t identity_class() const;
};

struct TableValidation {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

inline constexpr double kTableTolerance = 1e-8;
inline constexpr double kMultiplicityTolerance = 1e-6;

/// Character table of S_n (1 <= n <= 10) by the Murnaghan-Nakayama rule.
/// Classes are cycle types in increasing lexicographic order, irreducibles
/// are partitions in decreasing lexicographic order, named like "(4,1)".
CharacterTable sn_table(int n);

/// chi^lambda(mu) by border-strip removal.
std::int64_t sn_character(const Partition& lambda, const Partition& mu);

/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions(int n);
std::string partition_name(const Partition& p);

TableValidation validate_table(const CharacterTable& t);

/// Parses and validates a table file; throws DataError naming the failed check.
///   {"group_order": 5,
///    "classes": [{"name": "1A", "size": 1, "cycle_type": [1,1,1,1,1]}, ...],
///    "irreducibles": [{"name": "chi2", "values": [1, [0.309, 0.951], ...]}, ...]}
CharacterTable load_table(std::string_view json_text);
std::string export_table(const CharacterTable& t);

/// fix_k on every class. Requires cycle types of degree n.
std::vector<BigInt> perm_character(const CharacterTable& t, int n, int k);

/// c_k = <fix_k, chi> for k = 0..n.
Series multiplicity_series(const CharacterTable& t, std::string_view irreducible, int n);
Series multiplicity_series(const CharacterTable& t, std::size_t irreducible, int n);

}  // namespace posethom
