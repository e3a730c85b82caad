#include "ptk/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace ptk {

namespace {

// Expanded part lists beyond this are refused at parse time; a profile such
// as "1^4611686018427387904" is within kMaxTotal but cannot be materialized.
constexpr Count kMaxParts = 10'000'000;

std::string parse_message(const std::string& token, std::size_t pos,
                          const std::string& why) {
  std::ostringstream os;
  os << "invalid profile term '" << token << "' at position " << pos << ": "
     << why;
  return os.str();
}

Count checked_add(Count a, Count b) {
  if (a > kMaxTotal - b) throw DomainError("profile total exceeds 2^62");
  return a + b;
}

class ProfileLexer {
 public:
  explicit ProfileLexer(std::string_view text) : text_(text) {}

  std::vector<Count> run() {
    std::vector<Count> parts;
    Count total = 0;
    skip_space();
    if (at_end()) return parts;
    for (;;) {
      const std::size_t term_start = pos_;
      const Count base = read_int(term_start);
      Count mult = 1;
      skip_space();
      if (!at_end() && text_[pos_] == '^') {
        ++pos_;
        skip_space();
        mult = read_int(term_start);
        skip_space();
      }
      const std::string token = term_text(term_start);
      if (mult > kMaxParts - static_cast<Count>(parts.size())) {
        throw ParseError(token, term_start, "too many parts");
      }
      if (base > kMaxTotal / mult) {
        throw ParseError(token, term_start, "total exceeds 2^62");
      }
      try {
        total = checked_add(total, base * mult);
      } catch (const DomainError&) {
        throw ParseError(token, term_start, "total exceeds 2^62");
      }
      parts.insert(parts.end(), static_cast<std::size_t>(mult), base);
      if (at_end()) break;
      if (text_[pos_] != ',') {
        throw ParseError(std::string(1, text_[pos_]), pos_,
                         "expected ',' or '^'");
      }
      ++pos_;
      skip_space();
      if (at_end()) throw ParseError(",", pos_ - 1, "trailing comma");
    }
    return parts;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  std::string term_text(std::size_t start) const {
    std::size_t end = start;
    while (end < text_.size() && text_[end] != ',') ++end;
    std::string out(text_.substr(start, end - start));
    while (!out.empty() &&
           std::isspace(static_cast<unsigned char>(out.back())) != 0) {
      out.pop_back();
    }
    return out;
  }

  Count read_int(std::size_t term_start) {
    const std::size_t start = pos_;
    if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      throw ParseError(term_text(term_start), term_start,
                       "sizes must be positive integers");
    }
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      const std::string tok = at_end() ? std::string() : term_text(term_start);
      throw ParseError(tok, start, "expected an integer");
    }
    Count value = 0;
    const auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || value > kMaxTotal) {
      throw ParseError(term_text(term_start), term_start, "integer too large");
    }
    if (value == 0) {
      throw ParseError(term_text(term_start), term_start,
                       "sizes and multiplicities must be >= 1");
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::string token, std::size_t position,
                       const std::string& why)
    : Error(parse_message(token, position, why)),
      token_(std::move(token)),
      position_(position) {}

PartProfile::PartProfile(std::vector<Count> parts) : parts_(std::move(parts)) {
  for (Count p : parts_) {
    if (p < 1) throw DomainError("part sizes must be >= 1");
    total_ = checked_add(total_, p);
  }
  std::sort(parts_.begin(), parts_.end());
}

std::string to_string(const PartProfile& profile) {
  std::ostringstream os;
  const auto parts = profile.parts();
  bool first = true;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!first) os << ',';
    first = false;
    os << parts[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

PartProfile parse_profile(std::string_view text) {
  return PartProfile(ProfileLexer(text).run());
}

PartProfile Decomposition::reassemble() const {
  std::vector<Count> parts;
  parts.insert(parts.end(), static_cast<std::size_t>(k1), 1);
  parts.insert(parts.end(), static_cast<std::size_t>(k2), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(k3), 3);
  parts.insert(parts.end(), big.begin(), big.end());
  return PartProfile(std::move(parts));
}

Decomposition decompose(const PartProfile& profile) {
  Decomposition d;
  for (Count p : profile.parts()) {
    switch (p) {
      case 1: ++d.k1; break;
      case 2: ++d.k2; break;
      case 3: ++d.k3; break;
      default: d.big.push_back(p); break;
    }
  }
  d.p0 = d.k1 + 2 * d.k2 + 3 * d.k3;
  return d;
}

ClassComposition::ClassComposition(std::vector<Count> taken)
    : taken_(std::move(taken)) {
  bool any = false;
  for (Count c : taken_) {
    if (c < 0) throw CompositionError("class counts must be non-negative");
    any = any || c > 0;
  }
  if (!any) throw CompositionError("class must take at least one vertex");
}

Count ClassComposition::total() const noexcept {
  return std::accumulate(taken_.begin(), taken_.end(), Count{0});
}

void ClassComposition::check_against(const PartProfile& profile) const {
  if (taken_.size() != profile.size()) {
    std::ostringstream os;
    os << "class has " << taken_.size() << " entries, profile has "
       << profile.size() << " parts";
    throw CompositionError(os.str());
  }
  for (std::size_t i = 0; i < taken_.size(); ++i) {
    if (taken_[i] > profile[i]) {
      std::ostringstream os;
      os << "class takes " << taken_[i] << " vertices from part " << i
         << " of size " << profile[i];
      throw CompositionError(os.str());
    }
  }
}

bool Partition::is_exact_cover(const PartProfile& profile) const {
  std::vector<Count> sums(profile.size(), 0);
  for (const auto& cls : classes) {
    if (cls.size() != profile.size()) return false;
    for (std::size_t i = 0; i < cls.size(); ++i) sums[i] += cls[i];
  }
  return std::equal(sums.begin(), sums.end(), profile.parts().begin());
}

PartProfile induced_profile(const PartProfile& profile,
                            const ClassComposition& cls) {
  cls.check_against(profile);
  std::vector<Count> parts;
  for (Count c : cls.taken()) {
    if (c > 0) parts.push_back(c);
  }
  return PartProfile(std::move(parts));
}

std::vector<PartProfile> profiles_with_total(Count total) {
  std::vector<PartProfile> out;
  if (total < 0) return out;
  // Parts are generated in non-increasing order; PartProfile re-sorts them.
  std::vector<Count> current;
  std::function<void(Count, Count)> rec = [&](Count left, Count max_part) {
    if (left == 0) {
      out.emplace_back(current);
      return;
    }
    for (Count p = std::min(left, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(left - p, p);
      current.pop_back();
    }
  };
  if (total == 0) {
    out.emplace_back();
    return out;
  }
  rec(total, total);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartProfile> profiles_up_to(Count max_total) {
  std::vector<PartProfile> out;
  for (Count t = 1; t <= max_total; ++t) {
    auto level = profiles_with_total(t);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace ptk
