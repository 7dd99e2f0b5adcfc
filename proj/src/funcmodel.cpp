#include <genfourier/funcmodel.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

namespace genfourier::funcmodel {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

PiecewiseFn PiecewiseFn::build(std::vector<SmoothPiece> pieces, std::vector<BreakSpec> overrides,
                               bool bv_flag) {
  if (pieces.empty()) throw ArgumentError("PiecewiseFn: no pieces");
  std::sort(pieces.begin(), pieces.end(),
            [](const SmoothPiece& a, const SmoothPiece& b) { return a.lo < b.lo; });
  for (const auto& p : pieces) {
    if (!(p.lo < p.hi)) throw ArgumentError("PiecewiseFn: piece with lo >= hi");
    if (!p.expr) throw ArgumentError("PiecewiseFn: piece without expression");
  }
  for (size_t i = 0; i + 1 < pieces.size(); ++i)
    if (pieces[i].hi != pieces[i + 1].lo)
      throw ArgumentError("PiecewiseFn: pieces do not tile the domain (gap or overlap at " +
                          fmt(pieces[i].hi) + ")");

  PiecewiseFn fn;
  fn.pieces_ = std::move(pieces);
  fn.bv_ = bv_flag;

  // Boundary set: domain endpoints plus interior piece boundaries.
  std::vector<double> xs;
  xs.push_back(fn.pieces_.front().lo);
  for (const auto& p : fn.pieces_) xs.push_back(p.hi);

  auto find_spec = [&overrides](double x) -> const BreakSpec* {
    for (const auto& s : overrides)
      if (s.x == x) return &s;
    return nullptr;
  };
  for (const auto& s : overrides)
    if (std::find(xs.begin(), xs.end(), s.x) == xs.end())
      throw ArgumentError("PiecewiseFn: breakpoint override at " + fmt(s.x) +
                          " is not a piece boundary");

  for (double x : xs) {
    Breakpoint bp;
    bp.x = x;
    if (x > fn.domain_lo()) {
      const auto& left = fn.pieces_[fn.piece_index(std::nexttoward(x, fn.domain_lo()))];
      bp.left_value = left.expr->eval(x);
    }
    if (x < fn.domain_hi()) {
      const auto& right = fn.pieces_[fn.piece_index(std::nexttoward(x, fn.domain_hi()))];
      bp.right_value = right.expr->eval(x);
    }
    if (const BreakSpec* s = find_spec(x)) {
      if (s->left_value) bp.left_value = *s->left_value;
      if (s->right_value) bp.right_value = *s->right_value;
      if (s->value_at) bp.value_at = *s->value_at;
      else bp.value_at = bp.right_value ? *bp.right_value : *bp.left_value;
    } else {
      bp.value_at = bp.right_value ? *bp.right_value : *bp.left_value;
    }
    if ((bp.left_value && !std::isfinite(*bp.left_value)) ||
        (bp.right_value && !std::isfinite(*bp.right_value)) || !std::isfinite(bp.value_at))
      throw ArgumentError("PiecewiseFn: non-finite breakpoint value at " + fmt(x));
    fn.breakpoints_.push_back(bp);
  }
  return fn;
}

size_t PiecewiseFn::piece_index(double x) const {
  if (x < domain_lo() || x > domain_hi())
    throw DomainError("point " + fmt(x) + " outside domain [" + fmt(domain_lo()) + ", " +
                      fmt(domain_hi()) + "]");
  // Binary search over piece upper bounds; ties (x exactly at a boundary)
  // resolve to the piece on the left, except at the left endpoint.
  size_t lo = 0, hi = pieces_.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (x <= pieces_[mid].hi)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

const Breakpoint* PiecewiseFn::breakpoint_at(double x) const {
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x,
                             [](const Breakpoint& b, double v) { return b.x < v; });
  if (it != breakpoints_.end() && it->x == x) return &*it;
  return nullptr;
}

double PiecewiseFn::eval(double x) const {
  if (x < domain_lo() || x > domain_hi())
    throw DomainError("eval at " + fmt(x) + " outside domain");
  if (const Breakpoint* bp = breakpoint_at(x)) return bp->value_at;
  return pieces_[piece_index(x)].expr->eval(x);
}

double PiecewiseFn::left_limit(double x) const {
  if (!(x > domain_lo() && x <= domain_hi()))
    throw DomainError("left limit undefined at " + fmt(x));
  if (const Breakpoint* bp = breakpoint_at(x)) return *bp->left_value;
  return pieces_[piece_index(x)].expr->eval(x);
}

double PiecewiseFn::right_limit(double x) const {
  if (!(x >= domain_lo() && x < domain_hi()))
    throw DomainError("right limit undefined at " + fmt(x));
  if (const Breakpoint* bp = breakpoint_at(x)) return *bp->right_value;
  return pieces_[piece_index(x)].expr->eval(x);
}

double PiecewiseFn::jump_at(double x) const {
  if (x < domain_lo() || x > domain_hi()) throw DomainError("jump_at outside domain");
  if (x == domain_lo()) return right_limit(x) - eval(x);
  if (x == domain_hi()) return eval(x) - left_limit(x);
  return right_limit(x) - left_limit(x);
}

bool PiecewiseFn::is_step() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const SmoothPiece& p) { return p.is_constant(); });
}

bool PiecewiseFn::is_good() const {
  if (bv_) return true;
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const SmoothPiece& p) { return p.is_constant() || p.deriv != nullptr; });
}

PiecewiseFn PiecewiseFn::restricted(double lo, double hi, std::optional<double> value_at_lo,
                                    std::optional<double> value_at_hi) const {
  if (!(lo < hi) || lo < domain_lo() || hi > domain_hi())
    throw DomainError("restriction [" + fmt(lo) + ", " + fmt(hi) + "] not inside domain");
  std::vector<SmoothPiece> ps;
  for (const auto& p : pieces_) {
    double plo = std::max(p.lo, lo), phi = std::min(p.hi, hi);
    if (plo < phi) ps.push_back(SmoothPiece{plo, phi, p.expr, p.deriv});
  }
  std::vector<BreakSpec> specs;
  for (const auto& bp : breakpoints_) {
    if (bp.x <= lo || bp.x >= hi) continue;
    specs.push_back(BreakSpec{bp.x, bp.value_at, bp.left_value, bp.right_value});
  }
  BreakSpec at_lo{lo, value_at_lo ? *value_at_lo : eval(lo), std::nullopt, right_limit(lo)};
  BreakSpec at_hi{hi, value_at_hi ? *value_at_hi : eval(hi), left_limit(hi), std::nullopt};
  specs.push_back(at_lo);
  specs.push_back(at_hi);
  return build(std::move(ps), std::move(specs), bv_);
}

void FunctionCatalog::add(const std::string& name, PiecewiseFn fn) {
  validate_function(name, fn);
  entries_.insert_or_assign(name, std::move(fn));
}

const PiecewiseFn& FunctionCatalog::get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw ArgumentError("unknown catalog function '" + name + "'");
  return it->second;
}

std::vector<std::string> FunctionCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

void validate_function(const std::string& name, const PiecewiseFn& fn) {
  // Derivative spot check at each piece midpoint against central differences.
  const double h = 1e-5;
  for (const auto& p : fn.pieces()) {
    if (!p.deriv) continue;
    double m = 0.5 * (p.lo + p.hi);
    double fd = (p.expr->eval(m + h) - p.expr->eval(m - h)) / (2.0 * h);
    double an = p.deriv->eval(m);
    double scale = std::max(1.0, std::fabs(an));
    if (std::fabs(an - fd) > 1e-5 * scale)
      throw ArgumentError("catalog '" + name + "': declared derivative disagrees with finite " +
                          "differences at " + fmt(m) + " (" + fmt(an) + " vs " + fmt(fd) + ")");
  }
  // Stored one-sided values must be approached monotonically by the piece
  // expressions over a decreasing sequence of offsets.
  auto approaches = [](const ExprPtr& expr, double x, double target, double sign,
                       double max_h) {
    double prev = std::numeric_limits<double>::infinity();
    for (double h : {1e-3, 1e-5, 1e-7}) {
      if (h > max_h) continue;
      double d = std::fabs(expr->eval(x + sign * h) - target);
      if (d > prev + 1e-12 * std::max(1.0, std::fabs(target))) return false;
      prev = d;
    }
    return prev <= 1e-4 * std::max(1.0, std::fabs(target));
  };
  for (const auto& bp : fn.breakpoints()) {
    if (bp.left_value) {
      const auto& p = fn.pieces()[fn.piece_index(std::nexttoward(bp.x, fn.domain_lo()))];
      if (!approaches(p.expr, bp.x, *bp.left_value, -1.0, 0.5 * (p.hi - p.lo)))
        throw ArgumentError("catalog '" + name + "': stored left value at " + fmt(bp.x) +
                            " is not the left piece limit");
    }
    if (bp.right_value) {
      const auto& p = fn.pieces()[fn.piece_index(std::nexttoward(bp.x, fn.domain_hi()))];
      if (!approaches(p.expr, bp.x, *bp.right_value, 1.0, 0.5 * (p.hi - p.lo)))
        throw ArgumentError("catalog '" + name + "': stored right value at " + fmt(bp.x) +
                            " is not the right piece limit");
    }
  }
}

namespace {

ExprPtr num(double v) { return Expr::number(v); }
ExprPtr var() { return Expr::variable(); }

PiecewiseFn make_poly(double lo, double hi, ExprPtr expr, ExprPtr deriv) {
  return PiecewiseFn::build({SmoothPiece{lo, hi, std::move(expr), std::move(deriv)}}, {}, true);
}

}  // namespace

FunctionCatalog builtin_catalog() {
  const double pi = std::numbers::pi;
  FunctionCatalog cat;

  // u on [0,1]
  cat.add("identity", make_poly(0, 1, var(), num(1)));
  // u^2 on [0,1]
  cat.add("square", make_poly(0, 1, var() * var(), num(2) * var()));
  // u(1-u) on [0,1]
  cat.add("parabola", make_poly(0, 1, var() * (num(1) - var()), num(1) - num(2) * var()));
  // cos(2*pi*u) on [0,1]
  cat.add("cosine",
          PiecewiseFn::build({SmoothPiece{0, 1, Expr::unary(Expr::Kind::Cos, num(2 * pi) * var()),
                                          -(num(2 * pi) * Expr::unary(Expr::Kind::Sin,
                                                                      num(2 * pi) * var()))}},
                             {}, true));
  // u - floor(u) - 1/2 on [0,1]; linear on the open interval, value -1/2 at
  // both endpoints (the floor convention).
  cat.add("sawtooth",
          PiecewiseFn::build({SmoothPiece{0, 1, var() - num(0.5), num(1)}},
                             {BreakSpec{0.0, -0.5, std::nullopt, -0.5},
                              BreakSpec{1.0, -0.5, 0.5, std::nullopt}},
                             true));
  // unit step at 1/2: 0 below, 1 above, value 1 at the jump
  cat.add("step_half",
          PiecewiseFn::build({SmoothPiece{0, 0.5, num(0), nullptr},
                              SmoothPiece{0.5, 1, num(1), nullptr}},
                             {BreakSpec{0.5, 1.0, 0.0, 1.0}}, true));
  // |u - 1/2| on [0,1]
  cat.add("vkink",
          PiecewiseFn::build({SmoothPiece{0, 0.5, num(0.5) - var(), -num(1)},
                              SmoothPiece{0.5, 1, var() - num(0.5), num(1)}},
                             {}, true));
  // constant 1 on [0,1]
  cat.add("const_one", PiecewiseFn::build({SmoothPiece{0, 1, num(1), nullptr}}, {}, true));

  // Polynomials on [0,10] for the summation-formula suites.
  cat.add("identity10", make_poly(0, 10, var(), num(1)));
  cat.add("square10", make_poly(0, 10, var() * var(), num(2) * var()));
  cat.add("cube10", make_poly(0, 10, var() * var() * var(), num(3) * (var() * var())));
  cat.add("quartic10", make_poly(0, 10, var() * var() * (var() * var()),
                                 num(4) * (var() * var() * var())));
  return cat;
}

// --------------------------------------------------------------------------
// Catalog text format
// --------------------------------------------------------------------------

std::string serialize_catalog(const FunctionCatalog& catalog) {
  std::ostringstream out;
  for (const auto& [name, fn] : catalog.entries()) {
    out << "function " << name << "\n";
    out << "domain " << fmt(fn.domain_lo()) << " " << fmt(fn.domain_hi()) << "\n";
    out << "bv " << (fn.bv_flag() ? 1 : 0) << "\n";
    for (const auto& p : fn.pieces()) {
      out << "piece " << fmt(p.lo) << " " << fmt(p.hi) << "\n";
      out << "expr " << p.expr->to_string() << "\n";
      if (p.deriv) out << "deriv " << p.deriv->to_string() << "\n";
    }
    for (const auto& bp : fn.breakpoints()) {
      out << "breakpoint " << fmt(bp.x);
      if (bp.left_value) out << " left " << fmt(*bp.left_value);
      if (bp.right_value) out << " right " << fmt(*bp.right_value);
      out << " at " << fmt(bp.value_at) << "\n";
    }
    out << "end\n\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

double parse_num(const std::string& tok, const std::string& what) {
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size())
    throw ParseError("bad number '" + tok + "' in " + what);
  return v;
}

}  // namespace

FunctionCatalog parse_catalog(std::istream& in) {
  FunctionCatalog cat;
  std::string line;
  int lineno = 0;

  std::string name;
  bool in_function = false;
  bool have_domain = false;
  double dlo = 0, dhi = 0;
  bool bv = false;
  std::vector<SmoothPiece> pieces;
  std::vector<BreakSpec> specs;

  auto fail = [&lineno](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];

    if (kw == "function") {
      if (in_function) fail("nested 'function'");
      if (toks.size() != 2) fail("'function' needs a name");
      name = toks[1];
      in_function = true;
      have_domain = false;
      bv = false;
      pieces.clear();
      specs.clear();
    } else if (kw == "suite") {
      // Suite blocks are handled by the CLI config reader; skip here.
      while (std::getline(in, line)) {
        ++lineno;
        if (!tokenize(line).empty() && tokenize(line)[0] == "end") break;
      }
    } else if (!in_function) {
      // Config-level lines (suite parameters, seed, ...) belong to the
      // config reader; the catalog pass skips them.
      continue;
    } else if (kw == "domain") {
      if (toks.size() != 3) fail("'domain' needs two numbers");
      dlo = parse_num(toks[1], "domain");
      dhi = parse_num(toks[2], "domain");
      have_domain = true;
    } else if (kw == "bv") {
      if (toks.size() != 2) fail("'bv' needs 0 or 1");
      bv = parse_num(toks[1], "bv") != 0.0;
    } else if (kw == "piece") {
      if (toks.size() != 3) fail("'piece' needs two numbers");
      SmoothPiece p;
      p.lo = parse_num(toks[1], "piece");
      p.hi = parse_num(toks[2], "piece");
      pieces.push_back(std::move(p));
    } else if (kw == "expr") {
      if (pieces.empty() || pieces.back().expr) fail("'expr' without open piece");
      pieces.back().expr = parse_expression(line.substr(line.find("expr") + 4));
    } else if (kw == "deriv") {
      if (pieces.empty() || !pieces.back().expr || pieces.back().deriv)
        fail("'deriv' must follow the piece's expr");
      pieces.back().deriv = parse_expression(line.substr(line.find("deriv") + 5));
    } else if (kw == "breakpoint") {
      if (toks.size() < 2) fail("'breakpoint' needs a coordinate");
      BreakSpec s;
      s.x = parse_num(toks[1], "breakpoint");
      size_t i = 2;
      while (i < toks.size()) {
        if (toks[i] == "left" && i + 1 < toks.size())
          s.left_value = parse_num(toks[i + 1], "breakpoint left");
        else if (toks[i] == "right" && i + 1 < toks.size())
          s.right_value = parse_num(toks[i + 1], "breakpoint right");
        else if (toks[i] == "at" && i + 1 < toks.size())
          s.value_at = parse_num(toks[i + 1], "breakpoint at");
        else
          fail("bad breakpoint field '" + toks[i] + "'");
        i += 2;
      }
      specs.push_back(s);
    } else if (kw == "end") {
      if (!have_domain) fail("function '" + name + "' without domain");
      if (pieces.empty()) fail("function '" + name + "' without pieces");
      for (const auto& p : pieces)
        if (!p.expr) fail("piece without expr in '" + name + "'");
      if (pieces.front().lo != dlo || pieces.back().hi != dhi)
        fail("pieces of '" + name + "' do not span the declared domain");
      try {
        cat.add(name, PiecewiseFn::build(std::move(pieces), std::move(specs), bv));
      } catch (const ArgumentError& e) {
        fail(e.what());
      }
      in_function = false;
      pieces.clear();
      specs.clear();
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (in_function) throw ParseError("unterminated function block '" + name + "'");
  return cat;
}

FunctionCatalog parse_catalog_text(const std::string& text) {
  std::istringstream in(text);
  return parse_catalog(in);
}

}  // namespace genfourier::funcmodel
