#include "regevo/expr.hpp"

#include <utility>

namespace regevo {

Expr Expr::Word(std::string w) {
  Expr e;
  e.kind = Kind::kWord;
  e.word = std::move(w);
  return e;
}

Expr Expr::Or(std::vector<Expr> elements) {
  Expr e;
  e.kind = Kind::kOr;
  e.children = std::move(elements);
  return e;
}

Expr Expr::Ad(Expr left, Expr right, std::uint32_t gap_min, std::uint32_t gap_max) {
  Expr e;
  e.kind = Kind::kAd;
  e.children.push_back(std::move(left));
  e.children.push_back(std::move(right));
  e.gap_min = gap_min;
  e.gap_max = gap_max;
  return e;
}

Expr Expr::Not(Expr positive, Expr negatives) {
  Expr e;
  e.kind = Kind::kNot;
  e.children.push_back(std::move(positive));
  e.children.push_back(std::move(negatives));
  return e;
}

namespace {

const char* kind_name(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::kWord: return "word";
    case Expr::Kind::kOr: return "OR";
    case Expr::Kind::kAd: return "AD";
    case Expr::Kind::kNot: return "NOT";
  }
  return "?";
}

// Structural checker. Collects violations and, when `lower` is set, builds
// the typed rule alongside.
class Checker {
 public:
  std::vector<Violation> violations;

  void report(int constraint, const std::string& where, std::string message) {
    violations.push_back({constraint, where, std::move(message)});
  }

  // Flattens an OR group used as an AD operand (constraints 4 and 5).
  OrExpression operand(const Expr& e, const std::string& where) {
    OrExpression group;
    switch (e.kind) {
      case Expr::Kind::kWord:
        group.words.push_back(e.word);
        break;
      case Expr::Kind::kOr:
        flatten_or(e, where, group);
        break;
      default:
        report(4, where, std::string("AD operand must be an OR group, found ") + kind_name(e.kind));
    }
    return group;
  }

  void flatten_or(const Expr& e, const std::string& where, OrExpression& group) {
    for (std::size_t i = 0; i < e.children.size(); ++i) {
      const Expr& child = e.children[i];
      const std::string at = where + "[" + std::to_string(i) + "]";
      if (child.kind == Expr::Kind::kWord) {
        group.words.push_back(child.word);
      } else if (child.kind == Expr::Kind::kOr) {
        flatten_or(child, at, group);
      } else {
        report(5, at, std::string("OR inside AD may only nest OR, found ") + kind_name(child.kind));
      }
    }
  }

  AdExpression ad(const Expr& e, const std::string& where) {
    AdExpression out;
    if (e.children.size() != 2) {
      report(2, where, "AD must have exactly two operands");
      return out;
    }
    out.left = operand(e.children[0], where + ".left");
    out.right = operand(e.children[1], where + ".right");
    out.gap_min = e.gap_min;
    out.gap_max = e.gap_max;
    return out;
  }

  RegexRule rule(const Expr& root) {
    RegexRule out;
    if (root.kind != Expr::Kind::kNot || root.children.size() != 2) {
      report(1, "root", std::string("top level must be NOT(P, N), found ") + kind_name(root.kind));
      return out;
    }
    const Expr& positive = root.children[0];
    if (positive.kind != Expr::Kind::kAd) {
      report(2, "P", std::string("positive part must be one AD function, found ") +
                         kind_name(positive.kind));
    } else {
      out.positive = ad(positive, "P");
    }
    const Expr& negatives = root.children[1];
    if (negatives.kind != Expr::Kind::kOr) {
      report(3, "N", std::string("negative part must be an OR group, found ") +
                         kind_name(negatives.kind));
      return out;
    }
    for (std::size_t i = 0; i < negatives.children.size(); ++i) {
      const Expr& item = negatives.children[i];
      const std::string where = "N[" + std::to_string(i) + "]";
      if (item.kind == Expr::Kind::kWord) {
        out.negatives.emplace_back(item.word);
      } else if (item.kind == Expr::Kind::kAd) {
        out.negatives.emplace_back(ad(item, where));
      } else {
        report(3, where, std::string("negative expression must be a word or AD, found ") +
                             kind_name(item.kind));
      }
    }
    return out;
  }
};

}  // namespace

ValidationResult validate(const Expr& expr) {
  Checker checker;
  RegexRule lowered = checker.rule(expr);
  ValidationResult result{std::move(checker.violations)};
  if (result.ok()) result = validate_rule(lowered);
  return result;
}

RegexRule to_rule(const Expr& expr) {
  Checker checker;
  RegexRule lowered = checker.rule(expr);
  ValidationResult result{std::move(checker.violations)};
  if (result.ok()) result = validate_rule(lowered);
  if (!result.ok()) throw ConstraintError(std::move(result));
  return lowered;
}

namespace {

Expr or_expr(const OrExpression& group) {
  std::vector<Expr> words;
  words.reserve(group.words.size());
  for (const auto& w : group.words) words.push_back(Expr::Word(w));
  return Expr::Or(std::move(words));
}

Expr ad_expr(const AdExpression& ad) {
  return Expr::Ad(or_expr(ad.left), or_expr(ad.right), ad.gap_min, ad.gap_max);
}

}  // namespace

Expr to_expr(const RegexRule& rule) {
  std::vector<Expr> negatives;
  for (const auto& n : rule.negatives) {
    if (const auto* w = std::get_if<std::string>(&n)) {
      negatives.push_back(Expr::Word(*w));
    } else {
      negatives.push_back(ad_expr(std::get<AdExpression>(n)));
    }
  }
  return Expr::Not(ad_expr(rule.positive), Expr::Or(std::move(negatives)));
}

}  // namespace regevo
