#include "hominduce/expr.hpp"

#include "hominduce/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace hominduce {

namespace {

const char* op_name(Op op) {
  switch (op) {
    case Op::Leaf: return "_";
    case Op::dA: return "dA";
    case Op::dB: return "dB";
    case Op::Y: return "Y";
    case Op::Z: return "Z";
    case Op::hA: return "hA";
    case Op::hB: return "hB";
    case Op::Wedge: return "wedge";
    case Op::Lact: return "lact";
    case Op::Ract: return "ract";
  }
  return "?";
}

int op_degree(Op op) {
  switch (op) {
    case Op::dA:
    case Op::dB: return 1;
    case Op::hA:
    case Op::hB: return -1;
    default: return 0;
  }
}

[[noreturn]] void type_error(const std::string& what) { throw Error(ErrorCode::TypeCheckFailure, what); }

}  // namespace

Tree leaf() {
  static const Tree l = [] {
    auto n = std::make_shared<Node>();
    n->repr = "_";
    return n;
  }();
  return l;
}

Tree unary(Op op, Tree t) {
  auto n = std::make_shared<Node>();
  n->op = op;
  const Sp s = t->space;
  switch (op) {
    case Op::dA:
    case Op::hA:
      if (s != Sp::A) type_error(std::string(op_name(op)) + " needs an A-valued argument");
      n->space = Sp::A;
      break;
    case Op::dB:
    case Op::hB:
      if (s != Sp::B) type_error(std::string(op_name(op)) + " needs a B-valued argument");
      n->space = Sp::B;
      break;
    case Op::Y:
      if (s != Sp::A) type_error("Y needs an A-valued argument");
      n->space = Sp::B;
      break;
    case Op::Z:
      if (s != Sp::B) type_error("Z needs a B-valued argument");
      n->space = Sp::A;
      n->in_image_z = true;
      break;
    default: type_error("not a unary operation");
  }
  n->leaves = t->leaves;
  n->degree = t->degree + op_degree(op);
  n->odd_nodes = t->odd_nodes + (op_degree(op) & 1 ? 1 : 0);
  n->repr = std::string(op_name(op)) + "(" + t->repr + ")";
  n->kids = {std::move(t)};
  return n;
}

Tree binary(Op op, Tree l, Tree r) {
  auto n = std::make_shared<Node>();
  n->op = op;
  switch (op) {
    case Op::Wedge:
      if (l->space != Sp::A || r->space != Sp::A) type_error("wedge needs two A-valued arguments");
      n->space = Sp::A;
      n->in_image_z = l->in_image_z && r->in_image_z;
      break;
    case Op::Lact:
      if (l->space != Sp::A || !l->in_image_z || r->space != Sp::B) type_error("lact needs (Im Z, B) arguments");
      n->space = Sp::B;
      break;
    case Op::Ract:
      if (l->space != Sp::B || r->space != Sp::A || !r->in_image_z) type_error("ract needs (B, Im Z) arguments");
      n->space = Sp::B;
      break;
    default: type_error("not a binary operation");
  }
  n->leaves = l->leaves + r->leaves;
  n->degree = l->degree + r->degree;
  n->odd_nodes = l->odd_nodes + r->odd_nodes;
  n->repr = std::string(op_name(op)) + "(" + l->repr + "," + r->repr + ")";
  n->kids = {std::move(l), std::move(r)};
  return n;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  int next_slot = 1;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  void expect(char c) {
    skip();
    if (pos >= s.size() || s[pos] != c) throw Error(ErrorCode::InvalidInput, std::string("expected '") + c + "' in tree");
    ++pos;
  }
  Tree parse() {
    skip();
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      int v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
      if (v != next_slot) throw Error(ErrorCode::InvalidInput, "tree slots must be numbered left to right");
      ++next_slot;
      return leaf();
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string name = s.substr(start, pos - start);
    expect('(');
    Tree a = parse();
    skip();
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      Tree b = parse();
      expect(')');
      if (name == "wedge") return binary(Op::Wedge, a, b);
      if (name == "lact") return binary(Op::Lact, a, b);
      if (name == "ract") return binary(Op::Ract, a, b);
      throw Error(ErrorCode::InvalidInput, "unknown binary node '" + name + "'");
    }
    expect(')');
    static const std::map<std::string, Op> unaries = {{"dA", Op::dA}, {"dB", Op::dB}, {"Y", Op::Y},
                                                      {"Z", Op::Z},   {"hA", Op::hA}, {"hB", Op::hB}};
    auto it = unaries.find(name);
    if (it == unaries.end()) throw Error(ErrorCode::InvalidInput, "unknown unary node '" + name + "'");
    return unary(it->second, a);
  }
};

std::string numbered(const std::string& shape) {
  std::string out;
  int k = 1;
  for (char c : shape) {
    if (c == '_') out += std::to_string(k++);
    else out += c;
  }
  return out;
}

// Visits leaves left to right with the op of their parent (Op::Leaf for a bare root).
void visit_leaves(const Tree& t, Op parent, int& counter, const std::function<void(int, Op)>& f) {
  if (t->op == Op::Leaf) {
    f(counter++, parent);
    return;
  }
  for (const auto& k : t->kids) visit_leaves(k, t->op, counter, f);
}

bool is_unary(Op op) { return op != Op::Leaf && op != Op::Wedge && op != Op::Lact && op != Op::Ract; }

}  // namespace

Tree parse_tree(const std::string& text) {
  Parser p{text};
  Tree t = p.parse();
  p.skip();
  if (p.pos != text.size()) throw Error(ErrorCode::InvalidInput, "trailing characters in tree");
  return t;
}

std::vector<int> free_slots(const Tree& t) {
  std::vector<int> out;
  int c = 0;
  visit_leaves(t, Op::Leaf, c, [&](int i, Op parent) {
    if (!is_unary(parent)) out.push_back(i);
  });
  return out;
}

std::vector<int> decorated_slots(const Tree& t, Op decoration) {
  std::vector<int> out;
  int c = 0;
  visit_leaves(t, Op::Leaf, c, [&](int i, Op parent) {
    if (parent == decoration) out.push_back(i);
  });
  return out;
}

namespace {
void mask_rec(const Tree& t, int start, std::uint32_t& mask) {
  if (op_degree(t->op) & 1) mask ^= (1u << start) - 1u;
  int s = start;
  for (const auto& k : t->kids) {
    mask_rec(k, s, mask);
    s += k->leaves;
  }
}
}  // namespace

std::uint32_t koszul_mask(const Tree& t) {
  std::uint32_t m = 0;
  mask_rec(t, 0, m);
  return m;
}

void ExprSum::add(const Scalar& coef, const Tree& t, std::uint32_t mask) {
  if (t->leaves != arity_ || t->degree != degree_)
    throw Error(ErrorCode::ArityMismatch, "term " + numbered(t->repr) + " does not match the sum's arity/degree");
  if (is_zero(coef)) return;
  terms_.push_back(Term{coef, mask, t});
  dirty_ = true;
}

void ExprSum::add_literal(const Scalar& coef, const Tree& t, std::uint32_t explicit_mask) {
  add(coef, t, explicit_mask ^ koszul_mask(t));
}

void ExprSum::canonicalize() const {
  std::stable_sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    if (a.tree->repr != b.tree->repr) return a.tree->repr < b.tree->repr;
    return a.mask < b.mask;
  });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mask == t.mask && merged.back().tree->repr == t.tree->repr)
      merged.back().coef += t.coef;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return is_zero(t.coef); }),
               merged.end());
  terms_ = std::move(merged);
  dirty_ = false;
}

ExprSum& ExprSum::operator+=(const ExprSum& o) {
  if (o.empty()) return *this;
  if (o.arity_ != arity_ || o.degree_ != degree_) throw Error(ErrorCode::ArityMismatch, "adding sums of different shape");
  terms_.insert(terms_.end(), o.terms().begin(), o.terms().end());
  dirty_ = true;
  return *this;
}

ExprSum& ExprSum::operator-=(const ExprSum& o) { return *this += Scalar(-1) * o; }

ExprSum operator*(const Scalar& s, const ExprSum& e) {
  ExprSum r(e.arity_, e.degree_);
  if (is_zero(s)) return r;
  r.terms_ = e.terms();
  for (auto& t : r.terms_) t.coef *= s;
  return r;
}

bool operator==(const ExprSum& a, const ExprSum& b) {
  a.ensure();
  b.ensure();
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (a.arity_ != b.arity_ || a.degree_ != b.degree_) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const Term& x = a.terms_[i];
    const Term& y = b.terms_[i];
    if (x.coef != y.coef || x.mask != y.mask || x.tree->repr != y.tree->repr) return false;
  }
  return true;
}

ExprSum operator+(ExprSum a, const ExprSum& b) { return a += b; }
ExprSum operator-(ExprSum a, const ExprSum& b) { return a -= b; }

namespace {

Tree local(Op op, const std::vector<Tree>& k, const Pruning& p);

Tree local_unary(Op op, const Tree& a, const Pruning& p) {
  if (!a) return nullptr;
  if (op == Op::Z) {
    if (a->op == Op::Lact) return local(Op::Wedge, {a->kids[0], local_unary(Op::Z, a->kids[1], p)}, p);
    if (a->op == Op::Ract) return local(Op::Wedge, {local_unary(Op::Z, a->kids[0], p), a->kids[1]}, p);
    if (a->op == Op::hB && p.z_hb) return nullptr;
  }
  if (op == Op::hB) {
    if (a->op == Op::hB && p.hb_hb) return nullptr;
    if (a->op == Op::Y && p.hb_y) return nullptr;
  }
  return unary(op, a);
}

Tree local(Op op, const std::vector<Tree>& k, const Pruning& p) {
  if (k.size() == 1) return local_unary(op, k[0], p);
  const Tree& l = k[0];
  const Tree& r = k[1];
  if (!l || !r) return nullptr;
  switch (op) {
    case Op::Wedge:
      if (l->op == Op::Wedge) return local(Op::Wedge, {l->kids[0], local(Op::Wedge, {l->kids[1], r}, p)}, p);
      break;
    case Op::Lact:
      if (r->op == Op::Lact) return local(Op::Lact, {local(Op::Wedge, {l, r->kids[0]}, p), r->kids[1]}, p);
      break;
    case Op::Ract:
      if (l->op == Op::Ract) return local(Op::Ract, {l->kids[0], local(Op::Wedge, {l->kids[1], r}, p)}, p);
      if (l->op == Op::Lact) return local(Op::Lact, {l->kids[0], local(Op::Ract, {l->kids[1], r}, p)}, p);
      break;
    default: break;
  }
  return binary(op, l, r);
}

Tree normalize_tree(const Tree& t, const Pruning& p) {
  if (t->op == Op::Leaf) return t;
  std::vector<Tree> kids;
  for (const auto& k : t->kids) {
    Tree n = normalize_tree(k, p);
    if (!n) return nullptr;
    kids.push_back(std::move(n));
  }
  return local(t->op, kids, p);
}

}  // namespace

ExprSum ExprSum::normalized(const Pruning& p) const {
  ExprSum r(arity_, degree_);
  for (const auto& t : terms()) {
    Tree n = normalize_tree(t.tree, p);
    if (n) r.terms_.push_back(Term{t.coef, t.mask, n});
  }
  r.canonicalize();
  return r;
}

std::string ExprSum::render() const {
  if (terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coef.get_str();
    if (t.mask) {
      os << "*(-1)^{";
      bool f2 = true;
      for (int i = 0; i < arity_; ++i)
        if (t.mask & (1u << i)) {
          os << (f2 ? "" : "+") << "|" << (i + 1) << "|";
          f2 = false;
        }
      os << "}";
    }
    os << "*" << numbered(t.tree->repr);
  }
  return os.str();
}

namespace {
// Replaces leaf j by g; counts odd nodes of f lying wholly right of the slot.
Tree replace_leaf(const Tree& t, int start, int j, const Tree& g, int& odd_right) {
  if (start > j) {
    odd_right += t->odd_nodes;
    return t;
  }
  if (start + t->leaves <= j) return t;
  if (t->op == Op::Leaf) return g;
  std::vector<Tree> kids;
  int s = start;
  for (const auto& k : t->kids) {
    kids.push_back(replace_leaf(k, s, j, g, odd_right));
    s += k->leaves;
  }
  return kids.size() == 1 ? unary(t->op, kids[0]) : binary(t->op, kids[0], kids[1]);
}
}  // namespace

Term graft(const Term& f, int j, const Term& g) {
  int odd_right = 0;
  Tree t = replace_leaf(f.tree, 0, j, g.tree, odd_right);
  const int a = g.tree->leaves;
  const bool g_odd = g.tree->degree & 1;
  Scalar coef = f.coef * g.coef;
  if (g_odd && (odd_right & 1)) coef = -coef;
  const std::uint32_t low = f.mask & ((1u << j) - 1u);
  const std::uint32_t high = f.mask >> (j + 1);
  std::uint32_t mask = low | (high << (j + a));
  if (f.mask & (1u << j)) {
    mask |= ((1u << a) - 1u) << j;
    if (g_odd) coef = -coef;
  }
  mask ^= g.mask << j;
  return Term{coef, mask, t};
}

namespace {
Term hb_term() { return Term{Scalar(1), 0, unary(Op::hB, leaf())}; }

ExprSum graft_into(const ExprSum& e, const ExprSum& g, const std::function<std::vector<int>(const Tree&)>& slots,
                   bool operadic_sign, const Pruning& p) {
  ExprSum out(e.arity() + g.arity() - 1, e.degree() + g.degree());
  const int i = e.arity(), k = g.arity();
  for (const auto& te : e.terms())
    for (int j : slots(te.tree))
      for (const auto& tg : g.terms()) {
        Term t = graft(te, j, tg);
        if (operadic_sign && ((j + i + k * (i - j - 1)) & 1)) t.coef = -t.coef;
        out.add(t.coef, t.tree, t.mask);
      }
  return out.normalized(p);
}

ExprSum single_hb() {
  ExprSum h(1, -1);
  h.add(Scalar(1), hb_term().tree);
  return h;
}
}  // namespace

ExprSum compose_fb(const ExprSum& e, const Pruning& p) {
  for (const auto& t : e.terms())
    if (free_slots(t.tree).size() > 1)
      throw Error(ErrorCode::MultipleFreeSlots, "term " + numbered(t.tree->repr) + " has several free slots");
  return graft_into(e, single_hb(), free_slots, false, p);
}

ExprSum compose_all_slots_hb(const ExprSum& e, const Pruning& p) {
  return graft_into(
      e, single_hb(),
      [](const Tree& t) {
        std::vector<int> all(t->leaves);
        for (int i = 0; i < t->leaves; ++i) all[i] = i;
        return all;
      },
      false, p);
}

ExprSum compose_slot(const ExprSum& e, Op decoration, const ExprSum& g, const Pruning& p) {
  return graft_into(e, g, [decoration](const Tree& t) { return decorated_slots(t, decoration); }, true, p);
}

ExprSum compose_free(const ExprSum& e, const ExprSum& g, const Pruning& p) {
  return graft_into(e, g, free_slots, true, p);
}

ExprSum op_compose(const ExprSum& e, const ExprSum& g, const Pruning& p) {
  return graft_into(
      e, g,
      [](const Tree& t) {
        std::vector<int> all(t->leaves);
        for (int i = 0; i < t->leaves; ++i) all[i] = i;
        return all;
      },
      true, p);
}

SparseVec Bilinear::apply(int i, int j) const {
  auto it = table.find({i, j});
  return it == table.end() ? SparseVec{} : it->second;
}

MultiMap combine(const Bilinear& op, const MultiMap& l, const MultiMap& r) {
  if (!same_space(l.src, r.src) || !same_space(l.tgt, op.left) || !same_space(r.tgt, op.right))
    throw Error(ErrorCode::TypeCheckFailure, "combine: operand spaces do not match the bilinear map");
  MultiMap out = MultiMap::zero(l.src, op.out, l.arity + r.arity, l.degree + r.degree);
  const bool r_odd = r.degree & 1;
  std::unordered_map<TupleKey, SparseVec> acc;
  for (const auto& [kl, vl] : l.entries) {
    const bool flip = r_odd && (l.input_degree(kl) & 1);
    for (const auto& [kr, vr] : r.entries) {
      SparseVec val;
      for (const auto& [i, a] : vl)
        for (const auto& [j, b] : vr) {
          auto it = op.table.find({i, j});
          if (it != op.table.end()) axpy(val, a * b, it->second);
        }
      if (val.empty()) continue;
      axpy(acc[concat_keys(kl, kr, r.arity)], flip ? Scalar(-1) : Scalar(1), val);
    }
  }
  for (auto& [k, v] : acc)
    if (!v.empty()) out.add(k, v);
  return out;
}

namespace {
const GradedMap& unary_map(const Operations& ops, Op op) {
  const GradedMap* m = nullptr;
  switch (op) {
    case Op::dA: m = ops.dA; break;
    case Op::dB: m = ops.dB; break;
    case Op::Y: m = ops.Y; break;
    case Op::Z: m = ops.Z; break;
    case Op::hA: m = ops.hA; break;
    case Op::hB: m = ops.hB; break;
    default: break;
  }
  if (!m) throw Error(ErrorCode::TypeCheckFailure, std::string("operation ") + op_name(op) + " unavailable");
  return *m;
}

const Bilinear& binary_map(const Operations& ops, Op op) {
  const Bilinear* m = op == Op::Wedge ? ops.wedge : op == Op::Lact ? ops.lact : op == Op::Ract ? ops.ract : nullptr;
  if (!m) throw Error(ErrorCode::TypeCheckFailure, std::string("operation ") + op_name(op) + " unavailable");
  return *m;
}

SpacePtr root_space(const ExprSum& e, const Operations& ops) {
  if (e.empty()) return ops.B;
  return e.terms().front().tree->space == Sp::A ? ops.A : ops.B;
}
}  // namespace

const MultiMap& EvalCache::tree(const Tree& t) {
  auto it = cache_.find(t->repr);
  if (it != cache_.end()) return it->second;
  MultiMap m;
  if (t->op == Op::Leaf) {
    m = MultiMap::from_graded(GradedMap::identity(ops_.B));
  } else if (t->kids.size() == 1) {
    m = post_compose(unary_map(ops_, t->op), tree(t->kids[0]));
  } else {
    const MultiMap& l = tree(t->kids[0]);
    const MultiMap& r = tree(t->kids[1]);
    m = combine(binary_map(ops_, t->op), l, r);
  }
  return cache_.emplace(t->repr, std::move(m)).first->second;
}

MultiMap EvalCache::sum(const ExprSum& e) {
  MultiMap out = MultiMap::zero(ops_.B, root_space(e, ops_), e.arity(), e.degree());
  for (const auto& t : e.terms()) {
    MultiMap v = apply_parity_mask(tree(t.tree), t.mask);
    for (const auto& [k, vec] : v.entries) out.add(k, vec, t.coef);
  }
  return out;
}

MultiMap evaluate(const ExprSum& e, const Operations& ops) {
  EvalCache c(ops);
  return c.sum(e);
}

namespace {
SparseVec naive_value(const Tree& t, const Operations& ops, const std::vector<int>& in, int& pos) {
  if (t->op == Op::Leaf) return SparseVec{{in[pos++], Scalar(1)}};
  if (t->kids.size() == 1) return unary_map(ops, t->op).apply(naive_value(t->kids[0], ops, in, pos));
  SparseVec a = naive_value(t->kids[0], ops, in, pos);
  SparseVec b = naive_value(t->kids[1], ops, in, pos);
  const Bilinear& op = binary_map(ops, t->op);
  SparseVec out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) axpy(out, x * y, op.apply(i, j));
  return out;
}
}  // namespace

MultiMap evaluate_naive(const ExprSum& e, const Operations& ops) {
  const int n = e.arity();
  MultiMap out = MultiMap::zero(ops.B, root_space(e, ops), n, e.degree());
  const int dim = ops.B->total();
  std::vector<int> in(n, 0);
  while (true) {
    for (const auto& t : e.terms()) {
      int pos = 0;
      SparseVec v = naive_value(t.tree, ops, in, pos);
      if (v.empty()) continue;
      std::uint32_t m = t.mask ^ koszul_mask(t.tree);
      int par = 0;
      for (int i = 0; i < n; ++i)
        if (m & (1u << i)) par += ops.B->degree_of(in[i]);
      out.add(pack_tuple(in), v, (par & 1) ? Scalar(-t.coef) : t.coef);
    }
    int k = n - 1;
    while (k >= 0 && ++in[k] == dim) in[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

}  // namespace hominduce
