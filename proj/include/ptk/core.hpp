#pragma once

// Part profiles of complete multipartite graphs and the partition data model.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ptk {

/// Vertex counts, part sizes and class counts.  Signed so that a bad
/// subtraction shows up as a negative value instead of wrapping.
using Count = std::int64_t;

/// Upper bound on the total number of vertices accepted anywhere.
inline constexpr Count kMaxTotal = Count{1} << 62;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed profile string.  `position()` is the byte offset of the
/// offending token within the input.
class ParseError : public Error {
 public:
  ParseError(std::string token, std::size_t position, const std::string& why);
  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

class CompositionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// A case-specific routine was called outside its case.
class CaseError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

/// A construction produced something that contradicts its own invariants.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Multiset of part sizes, kept in ascending order.  Two profiles compare
/// equal iff they describe isomorphic complete multipartite graphs.
class PartProfile {
 public:
  PartProfile() = default;
  explicit PartProfile(std::vector<Count> parts);

  std::span<const Count> parts() const noexcept { return parts_; }
  Count operator[](std::size_t i) const { return parts_[i]; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  Count total() const noexcept { return total_; }

  friend bool operator==(const PartProfile&, const PartProfile&) = default;
  friend auto operator<=>(const PartProfile& a, const PartProfile& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Count> parts_;
  Count total_ = 0;
};

/// Compressed `base^multiplicity` form, e.g. "1^3,2^2,5,7".  Empty profile
/// prints as "".
std::string to_string(const PartProfile& profile);

/// Grammar: comma-separated terms `INT` or `INT^INT`, all integers >= 1,
/// whitespace ignored, empty input allowed.
PartProfile parse_profile(std::string_view text);

/// The (k1, k2, k3, big, p0) view: counts of parts of size 1, 2, 3, the
/// ascending parts of size >= 4, and p0 = k1 + 2 k2 + 3 k3.
struct Decomposition {
  Count k1 = 0;
  Count k2 = 0;
  Count k3 = 0;
  std::vector<Count> big;
  Count p0 = 0;

  Count n() const noexcept { return static_cast<Count>(big.size()); }

  /// Inverse of decompose().  Part indices of the result are: size-1 parts
  /// in [0, k1), size-2 parts next, then size-3 parts, then `big` in order.
  PartProfile reassemble() const;
};

Decomposition decompose(const PartProfile& profile);

/// Per-part vertex counts of one partition class.  Vertices inside a part
/// are interchangeable, so this fixes the class up to isomorphism.
class ClassComposition {
 public:
  /// Throws CompositionError if `taken` is all zero or has a negative entry.
  explicit ClassComposition(std::vector<Count> taken);

  std::span<const Count> taken() const noexcept { return taken_; }
  Count operator[](std::size_t i) const { return taken_[i]; }
  std::size_t size() const noexcept { return taken_.size(); }
  Count total() const noexcept;

  /// Throws CompositionError on a length mismatch or taken[i] > parts[i].
  void check_against(const PartProfile& profile) const;

  friend bool operator==(const ClassComposition&,
                         const ClassComposition&) = default;
  friend auto operator<=>(const ClassComposition& a,
                          const ClassComposition& b) {
    return a.taken_ <=> b.taken_;
  }

 private:
  std::vector<Count> taken_;
};

struct Partition {
  std::vector<ClassComposition> classes;

  std::size_t size() const noexcept { return classes.size(); }

  /// Column sums over classes equal the part sizes exactly.
  bool is_exact_cover(const PartProfile& profile) const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Profile of the subgraph induced by a class: the sorted nonzero counts.
PartProfile induced_profile(const PartProfile& profile,
                            const ClassComposition& cls);

/// Every profile with exactly `total` vertices (the integer partitions of
/// `total`), in ascending lexicographic order of the sorted part lists.
std::vector<PartProfile> profiles_with_total(Count total);

/// All profiles with 1 <= total <= max_total, grouped by total.
std::vector<PartProfile> profiles_up_to(Count max_total);

}  // namespace ptk
