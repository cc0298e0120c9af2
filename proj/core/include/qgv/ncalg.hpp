#pragma once

#include "qgv/qscalar.hpp"
#include "qgv/report.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace qgv {

using GenId = uint16_t;
using Word = std::vector<GenId>;

struct WordHash {
  size_t operator()(const Word& w) const {
    size_t h = 1469598103934665603ull;
    for (GenId g : w) {
      h ^= g;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct GeneratorInfo {
  std::string cls;             // generator family, e.g. "u", "t", "x", "dx", "del"
  std::array<int, 2> idx{0, 0};
  int grade = 0;               // form degree, 0 or 1
  int charge = 0;              // U(1) charge
  int weight = 1;              // termination weight (>= 0)
  std::string name;            // canonical rendering, e.g. "u(1,+)"
  bool annihilates_right = false;  // words ending in this generator are zero
};

class Algebra;

/// Noncommutative polynomial: finite QScalar-linear combination of words over
/// one algebra's generators.  Zero coefficients are never stored.
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(const Algebra* alg) : alg_(alg) {}

  static NCPoly zero(const Algebra& a) { return NCPoly(&a); }
  static NCPoly unit(const Algebra& a);
  static NCPoly gen(const Algebra& a, GenId g);
  static NCPoly term(const Algebra& a, QScalar c, Word w);

  const Algebra* algebra() const { return alg_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Word, QScalar>& terms() const { return terms_; }

  void add_term(const Word& w, const QScalar& c);
  void add_scaled(const NCPoly& p, const QScalar& c);

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator*(const NCPoly& o) const;  // concatenation product, NOT reduced
  NCPoly operator*(const QScalar& c) const;
  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);

  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  /// Form degree / U(1) charge if every word agrees, nullopt otherwise
  /// (the zero polynomial reports 0).
  std::optional<int> grade() const;
  std::optional<int> charge() const;

  std::string str(ScalarStyle style = ScalarStyle::S) const;
  size_t approx_bytes() const;

 private:
  void require_same(const NCPoly& o) const;
  const Algebra* alg_ = nullptr;
  std::map<Word, QScalar> terms_;
};

inline NCPoly operator*(const QScalar& c, const NCPoly& p) { return p * c; }

enum class Strategy : uint8_t { Leftmost, Rightmost };

struct RewriteRule {
  enum class Kind : uint8_t { Exchange, Collapse, Source, Tower };
  GenId a = 0, b = 0;
  NCPoly rhs;
  Kind kind = Kind::Exchange;
};

struct ConfluenceIssue {
  Word word;
  std::string detail;
};

struct ConfluenceReport {
  long words_checked = 0;
  long critical_pairs = 0;
  std::vector<ConfluenceIssue> issues;
  bool confluent() const { return issues.empty(); }
};

/// A curated adjacent-pair rewrite system with a total generator order.
/// Immutable after construction; normal_form is a pure function with an
/// internal memo table (guarded, safe for concurrent callers).
class Algebra {
 public:
  const std::string& name() const { return name_; }
  size_t gen_count() const { return gens_.size(); }
  const GeneratorInfo& gen(GenId g) const { return gens_.at(g); }
  const std::vector<GeneratorInfo>& generators() const { return gens_; }

  std::optional<GenId> find(const std::string& cls, int i0 = 0, int i1 = 0) const;
  GenId need(const std::string& cls, int i0 = 0, int i1 = 0) const;
  std::vector<GenId> by_class(const std::string& cls) const;

  int word_weight(const Word& w) const;
  int word_grade(const Word& w) const;
  int word_charge(const Word& w) const;
  bool less_words(const Word& a, const Word& b) const;

  const RewriteRule* rule(GenId a, GenId b) const;
  const std::vector<RewriteRule>& rules() const { return rule_list_; }
  bool pair_allowed(GenId a, GenId b) const;
  bool pair_is_boundary(GenId a, GenId b) const;

  NCPoly normal_form(const NCPoly& p, Strategy st = Strategy::Leftmost) const;

  /// Joinability of every overlapping critical pair (all length-3 words with
  /// two redexes), plus detection of descending pairs lacking a rule.
  ConfluenceReport check_local_confluence() const;

  /// Dual-strategy agreement on seeded random words.
  ConfluenceReport random_word_agreement(int count, int maxlen, uint64_t seed) const;

  const std::optional<Rational>& specialization() const { return s0_; }

  std::string word_str(const Word& w) const;
  void clear_memo() const;

 private:
  friend class AlgebraBuilder;
  Algebra() = default;

  NCPoly word_nf(const Word& w, Strategy st, int depth) const;
  int find_redex(const Word& w, Strategy st) const;  // -1 if none; throws on bad pair

  std::string name_;
  std::vector<GeneratorInfo> gens_;
  std::map<std::pair<std::string, std::array<int, 2>>, GenId> lookup_;
  std::unordered_map<uint32_t, size_t> rule_index_;
  std::vector<RewriteRule> rule_list_;
  std::set<uint32_t> allowed_pairs_;
  std::set<uint32_t> boundary_pairs_;  // instantiated-tower edges; error if hit
  std::optional<Rational> s0_;

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<Word, NCPoly, WordHash> memo_[2];
  mutable size_t memo_bytes_ = 0;
  size_t memo_cap_bytes_ = 0;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Raw linear relation: sum of coeff * word (word length <= 2) equal to zero.
using RawRelation = std::vector<std::pair<QScalar, Word>>;

class AlgebraBuilder {
 public:
  explicit AlgebraBuilder(std::string name, std::optional<Rational> s0 = std::nullopt);

  GenId add_generator(GeneratorInfo info);
  const GeneratorInfo& gen(GenId g) const { return alg_->gens_.at(g); }
  GenId need(const std::string& cls, int i0 = 0, int i1 = 0) const;

  /// Installs rules derived from the relations by exact Gaussian elimination:
  /// each relation's largest word becomes reducible.  Relations must be
  /// grade- and charge-homogeneous.
  void add_relations(const std::vector<RawRelation>& rels, RewriteRule::Kind kind);

  void add_rule(GenId a, GenId b, const RawRelation& rhs, RewriteRule::Kind kind);
  void allow_pair(GenId a, GenId b);
  /// Declares a pair as an instantiated-tower edge: the build succeeds, but
  /// reduction through the pair raises an error.
  void mark_boundary(GenId a, GenId b);

  /// Coefficient adapter: identity for the generic field, evaluation at s0
  /// for a specialized algebra.
  QScalar adapt(const QScalar& v) const;

  /// Adds a tower of formal inverses g_m = (constant + q^m * scaled)^{-1}
  /// (or plain scaled^{-1} when `constant` is absent).  Pass-through shifts
  /// are read off the installed rules of `scaled`; classes listed in
  /// `skip_classes` receive no pass rules here.  Throws if `scaled` is not
  /// central up to a q-power against some generator class.
  std::vector<GenId> define_inverse(const std::string& cls, GenId scaled,
                                    std::optional<GenId> constant, int span,
                                    const std::vector<std::string>& skip_classes = {});

  /// Scaling exponent sigma with scaled * h = q^sigma h * scaled.
  int pass_exponent(GenId scaled, GenId h) const;

  /// Read access to the algebra under construction; used to derive rules by
  /// reduction against the rules installed so far.
  const Algebra& peek() const { return *alg_; }

  std::shared_ptr<const Algebra> build(bool skip_validation = false);

 private:
  void validate_rule(const RewriteRule& r) const;
  std::shared_ptr<Algebra> alg_;
  bool built_ = false;
};

/// Degree-(+1) graded derivation given by generator images, extended by the
/// graded Leibniz rule with the Koszul sign of the left factor.
class GradedDerivation {
 public:
  GradedDerivation() = default;
  GradedDerivation(AlgebraPtr alg, std::string name);

  void set_image(GenId g, NCPoly img);
  const NCPoly& image(GenId g) const;
  bool has_image(GenId g) const;

  /// Leibniz extension followed by normal_form.
  NCPoly apply(const NCPoly& p) const;
  /// Leibniz extension without the final reduction.
  NCPoly apply_raw(const NCPoly& p) const;

  const std::string& name() const { return name_; }
  const Algebra* algebra() const { return alg_.get(); }

 private:
  AlgebraPtr alg_;
  std::string name_;
  std::vector<std::optional<NCPoly>> images_;
};

struct ThetaProjection {
  NCPoly c0, cP2, cM2;  // p = t(0)*c0 + t(-2)*cP2 + t(+2)*cM2
};

/// Unique left decomposition of a reduced 1-form along the theta basis.
/// Throws if some word of positive grade does not start with a theta.
ThetaProjection theta_project(const NCPoly& p_normal);

}  // namespace qgv
