#include "dstar/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace dstar {

const char* fault_name(Fault f) {
  switch (f) {
    case Fault::DegreeMismatch: return "DegreeMismatch";
    case Fault::ClosureCapExceeded: return "ClosureCapExceeded";
    case Fault::ActionKindMismatch: return "ActionKindMismatch";
    case Fault::VertexOutOfRange: return "VertexOutOfRange";
    case Fault::CapExceeded: return "CapExceeded";
    case Fault::UnknownName: return "UnknownName";
    case Fault::IndexOutOfRange: return "IndexOutOfRange";
    case Fault::NotAPrefix: return "NotAPrefix";
    case Fault::NotANeighborInStar: return "NotANeighborInStar";
    case Fault::NotAStar: return "NotAStar";
    case Fault::NotADoubleStar: return "NotADoubleStar";
    case Fault::NotArcTransitive: return "NotArcTransitive";
    case Fault::NotSelfPaired: return "NotSelfPaired";
    case Fault::NotArcTransitiveOrbit: return "NotArcTransitiveOrbit";
    case Fault::RTooSmall: return "RTooSmall";
    case Fault::HypothesisViolated: return "HypothesisViolated";
    case Fault::NotSubgroup: return "NotSubgroup";
    case Fault::AsymmetricDoubleCoset: return "AsymmetricDoubleCoset";
    case Fault::NotInvariant: return "NotInvariant";
    case Fault::EmptyQuotient: return "EmptyQuotient";
    case Fault::NotAQuotientStar: return "NotAQuotientStar";
    case Fault::NotReducible: return "NotReducible";
    case Fault::LevelNotComputed: return "LevelNotComputed";
    case Fault::ParseError: return "ParseError";
  }
  return "Error";
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    require(v >= 0 && v < degree() && !seen[v], Fault::ParseError,
            "image vector is not a bijection");
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& right) const {
  require(degree() == right.degree(), Fault::DegreeMismatch,
          "composing permutations of different degree");
  std::vector<int> img(img_.size());
  for (int i = 0; i < degree(); ++i) img[i] = right.img_[img_[i]];
  Permutation out;
  out.img_ = std::move(img);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 0; i < degree(); ++i) img[img_[i]] = i;
  Permutation out;
  out.img_ = std::move(img);
  return out;
}

std::string Permutation::cycles() const {
  std::ostringstream out;
  std::vector<char> seen(img_.size(), 0);
  bool printed = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out << '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << j + 1;
      first = false;
      seen[j] = 1;
      j = img_[j];
    } while (j != i);
    out << ')';
    printed = true;
  }
  if (!printed) return "(1)";
  return out.str();
}

std::size_t PermHash::operator()(const Permutation& p) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int v : p.images())
    h = h * 0x100000001b3ull ^ static_cast<std::size_t>(v);
  return h;
}

namespace {

std::vector<int> parse_cycle_points(const std::string& tok, int degree) {
  // tok is the inside of one parenthesis group.
  std::vector<int> pts;
  bool separated = tok.find_first_of(" ,\t") != std::string::npos;
  if (!separated && degree <= 9 && tok.size() > 1) {
    for (char c : tok) {
      require(std::isdigit(static_cast<unsigned char>(c)), Fault::ParseError,
              "bad cycle token '" + tok + "'");
      pts.push_back(c - '0');
    }
    return pts;
  }
  std::istringstream in(tok);
  std::string piece;
  while (std::getline(in, piece, ' ')) {
    std::string clean;
    for (char c : piece)
      if (c != ',' && c != '\t') clean += c;
    if (clean.empty()) continue;
    try {
      pts.push_back(std::stoi(clean));
    } catch (const std::exception&) {
      fail(Fault::ParseError, "bad point '" + clean + "' in cycle notation");
    }
  }
  return pts;
}

}  // namespace

Permutation parse_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    require(c == '(', Fault::ParseError,
            "expected '(' in cycle notation: " + text);
    std::size_t close = text.find(')', pos);
    require(close != std::string::npos, Fault::ParseError,
            "unbalanced parenthesis in: " + text);
    std::vector<int> pts =
        parse_cycle_points(text.substr(pos + 1, close - pos - 1), degree);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      int from = pts[i] - 1;
      int to = pts[(i + 1) % pts.size()] - 1;
      require(from >= 0 && from < degree && to >= 0 && to < degree,
              Fault::ParseError, "point out of range in: " + text);
      require(img[from] == from || pts.size() == 1, Fault::ParseError,
              "point repeated across cycles in: " + text);
      img[from] = to;
    }
    any = true;
    pos = close + 1;
  }
  require(any, Fault::ParseError, "empty cycle notation");
  return Permutation(std::move(img));
}

PermGroup PermGroup::closure(const std::vector<Permutation>& generators,
                             std::size_t cap) {
  require(!generators.empty(), Fault::ParseError, "no generators");
  require(cap >= 1, Fault::ParseError, "closure cap must be positive");
  int degree = generators[0].degree();
  for (const auto& g : generators)
    require(g.degree() == degree, Fault::DegreeMismatch,
            "generators of mixed degree");

  PermGroup g;
  g.degree_ = degree;
  g.gens_ = generators;
  g.elements_.push_back(Permutation::identity(degree));
  g.deriv_.emplace_back(-1, -1);
  g.index_.emplace(g.elements_[0], 0);

  // Plain BFS over right-multiplication by generators; deterministic given
  // the generator list.
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      Permutation next = g.elements_[head] * generators[gi];
      if (g.index_.count(next)) continue;
      require(g.elements_.size() < cap, Fault::ClosureCapExceeded,
              "group closure exceeds cap " + std::to_string(cap));
      g.index_.emplace(next, static_cast<int>(g.elements_.size()));
      g.elements_.push_back(std::move(next));
      g.deriv_.emplace_back(static_cast<int>(head), static_cast<int>(gi));
    }
  }
  return g;
}

PermGroup PermGroup::from_elements(int degree,
                                   std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  require(!g.elements_.empty() && g.elements_[0].is_identity(),
          Fault::NotSubgroup, "element list lacks the identity");
  g.gens_ = g.elements_;
  g.rebuild_index();
  return g;
}

void PermGroup::rebuild_index() {
  index_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], static_cast<int>(i));
}

bool PermGroup::contains(const Permutation& p) const {
  return index_.count(p) > 0;
}

int PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_) return false;
  for (const auto& e : elements_)
    if (!g.contains(e)) return false;
  return true;
}

bool PermGroup::same_elements_as(const PermGroup& g) const {
  return order() == g.order() && is_subgroup_of(g);
}

PermGroup PermGroup::intersection(const PermGroup& a, const PermGroup& b) {
  require(a.degree() == b.degree(), Fault::DegreeMismatch,
          "intersecting groups of different degree");
  std::vector<Permutation> common;
  for (const auto& e : a.elements())
    if (b.contains(e)) common.push_back(e);
  return from_elements(a.degree(), std::move(common));
}

std::vector<Permutation> alternating_generators(int n) {
  require(n >= 3, Fault::UnknownName, "alternating group needs n >= 3");
  std::vector<Permutation> gens;
  gens.push_back(parse_cycles("(1 2 3)", n));
  if (n > 3) {
    std::ostringstream big;
    big << '(';
    if (n % 2 == 1) {
      for (int i = 1; i <= n; ++i) big << (i > 1 ? " " : "") << i;
    } else {
      for (int i = 2; i <= n; ++i) big << (i > 2 ? " " : "") << i;
    }
    big << ')';
    gens.push_back(parse_cycles(big.str(), n));
  }
  return gens;
}

std::vector<Permutation> symmetric_generators(int n) {
  require(n >= 2, Fault::UnknownName, "symmetric group needs n >= 2");
  std::vector<Permutation> gens;
  gens.push_back(parse_cycles("(1 2)", n));
  if (n > 2) {
    std::ostringstream big;
    big << '(';
    for (int i = 1; i <= n; ++i) big << (i > 1 ? " " : "") << i;
    big << ')';
    gens.push_back(parse_cycles(big.str(), n));
  }
  return gens;
}

std::vector<Permutation> cyclic_generators(int n) {
  require(n >= 2, Fault::UnknownName, "cyclic group needs n >= 2");
  std::ostringstream rot;
  rot << '(';
  for (int i = 1; i <= n; ++i) rot << (i > 1 ? " " : "") << i;
  rot << ')';
  return {parse_cycles(rot.str(), n)};
}

std::vector<Permutation> dihedral_generators(int n) {
  auto gens = cyclic_generators(n);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (n - i) % n;
  gens.push_back(Permutation(std::move(img)));
  return gens;
}

std::vector<Permutation> wreath_sym2_generators(int n) {
  require(n >= 2, Fault::UnknownName, "wreath product needs n >= 2");
  int deg = 2 * n;
  std::vector<Permutation> gens;
  for (int side = 0; side < 2; ++side) {
    int off = side * n;
    {
      std::vector<int> img(deg);
      for (int i = 0; i < deg; ++i) img[i] = i;
      img[off] = off + 1;
      img[off + 1] = off;
      gens.push_back(Permutation(std::move(img)));
    }
    if (n > 2) {
      std::vector<int> img(deg);
      for (int i = 0; i < deg; ++i) img[i] = i;
      for (int i = 0; i < n; ++i) img[off + i] = off + (i + 1) % n;
      gens.push_back(Permutation(std::move(img)));
    }
  }
  {
    std::vector<int> img(deg);
    for (int i = 0; i < n; ++i) {
      img[i] = n + i;
      img[n + i] = i;
    }
    gens.push_back(Permutation(std::move(img)));
  }
  return gens;
}

}  // namespace dstar
