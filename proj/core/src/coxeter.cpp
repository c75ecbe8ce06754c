#include "klsheaf/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "klsheaf/errors.hpp"

namespace klsheaf {

FMatrix identity_matrix(const FieldSpecPtr& field, int n) {
  FMatrix m(n, std::vector<FieldElement>(n, field->zero()));
  for (int i = 0; i < n; ++i) m[i][i] = field->one();
  return m;
}

FMatrix mat_mul(const FMatrix& a, const FMatrix& b) {
  size_t n = a.size();
  FMatrix out(n, std::vector<FieldElement>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      FieldElement acc = a[i][0] * b[0][j];
      for (size_t k = 1; k < n; ++k) acc += a[i][k] * b[k][j];
      out[i][j] = std::move(acc);
    }
  return out;
}

int matrix_rank(FMatrix m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      FieldElement f = m[i][col] / m[rank][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

bool is_reflection_matrix(const FMatrix& m) {
  size_t n = m.size();
  const FieldSpecPtr& field = m[0][0].spec();
  // involution
  FMatrix sq = mat_mul(m, m);
  FMatrix id = identity_matrix(field, static_cast<int>(n));
  if (sq != id) return false;
  // fixed hyperplane: m - 1 has rank exactly 1
  FMatrix diff = m;
  for (size_t i = 0; i < n; ++i) diff[i][i] -= field->one();
  return matrix_rank(std::move(diff)) == 1;
}

Root reflection_root(const FieldSpecPtr& field, const FMatrix& m) {
  size_t n = m.size();
  // any nonzero column of m - 1 spans the root line
  for (size_t j = 0; j < n; ++j) {
    Root col(n, field->zero());
    bool nonzero = false;
    for (size_t i = 0; i < n; ++i) {
      col[i] = m[i][j];
      if (i == j) col[i] -= field->one();
      nonzero = nonzero || !col[i].is_zero();
    }
    if (!nonzero) continue;
    size_t lead = 0;
    while (col[lead].is_zero()) ++lead;
    FieldElement scale = col[lead];
    for (size_t i = lead; i < n; ++i) col[i] = col[i] / scale;
    for (size_t i = 0; i < n; ++i)
      if (col[i].sign() < 0)
        throw InternalError("root label has mixed-sign coordinates");
    return col;
  }
  throw InternalError("reflection_root called on the identity matrix");
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, FieldSpecPtr field)
    : matrix_(std::move(matrix)), field_(std::move(field)) {
  int r = matrix_.rank();
  gram_.assign(r, std::vector<FieldElement>(r, field_->zero()));
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t)
      gram_[s][t] = (s == t) ? field_->one() : field_->gram_value(matrix_.m[s][t]);

  // s(alpha_j) = alpha_j - 2 B(alpha_s, alpha_j) alpha_s
  simples_.reserve(r);
  for (int s = 0; s < r; ++s) {
    FMatrix ms = identity_matrix(field_, r);
    for (int j = 0; j < r; ++j) ms[s][j] -= gram_[s][j] + gram_[s][j];
    simples_.push_back(std::move(ms));
  }
}

void CoxeterSystem::verify_relations() const {
  int r = rank();
  FMatrix id = identity_matrix(field_, r);
  for (int s = 0; s < r; ++s)
    if (mat_mul(simples_[s], simples_[s]) != id)
      throw InternalError("simple reflection " + generator_name(s) + " is not an involution");
  for (int s = 0; s < r; ++s)
    for (int t = s + 1; t < r; ++t) {
      int m = matrix_.m[s][t];
      if (m == 0) continue;
      FMatrix prod = id;
      for (int k = 0; k < m; ++k) prod = mat_mul(prod, mat_mul(simples_[s], simples_[t]));
      if (prod != id)
        throw InternalError("braid relation of order " + std::to_string(m) + " fails for (" +
                            generator_name(s) + ", " + generator_name(t) + ")");
    }
}

CoxeterSystemPtr CoxeterSystem::build(CoxeterMatrix matrix) {
  validate_coxeter_matrix(matrix.m);
  if (matrix.generators.empty()) {
    for (int i = 0; i < matrix.rank(); ++i) matrix.generators.push_back("s" + std::to_string(i + 1));
  }
  if (static_cast<int>(matrix.generators.size()) != matrix.rank())
    throw ValidationError("generator name list does not match the matrix rank");
  FieldSpecPtr field = build_field(matrix.m);
  CoxeterSystemPtr sys(new CoxeterSystem(std::move(matrix), std::move(field)));
  sys->verify_relations();
  return sys;
}

int CoxeterSystem::generator_index(const std::string& name) const {
  for (int s = 0; s < rank(); ++s)
    if (matrix_.generators[s] == name) return s;
  return -1;
}

BallPtr Ball::enumerate(CoxeterSystemPtr system, int max_length) {
  if (max_length < 0) throw ValidationError("ball radius must be nonnegative");
  auto ball = std::shared_ptr<Ball>(new Ball());
  ball->system_ = system;
  ball->radius_ = max_length;

  int r = system->rank();
  GroupElement e{identity_matrix(system->field(), r), 0, {}};
  ball->index_.emplace(e.matrix, 0);
  ball->elems_.push_back(std::move(e));
  ball->rmult_.emplace_back(r, kNoElement);

  ball->complete_ = true;
  size_t head = 0;
  while (head < ball->elems_.size()) {
    ElementId w = static_cast<ElementId>(head++);
    int len = ball->elems_[w].length;
    for (int s = 0; s < r; ++s) {
      FMatrix prod = mat_mul(ball->elems_[w].matrix, system->simple_reflection(s));
      auto it = ball->index_.find(prod);
      if (it != ball->index_.end()) {
        ball->rmult_[w][s] = it->second;
      } else if (len < max_length) {
        ElementId id = static_cast<ElementId>(ball->elems_.size());
        GroupElement g;
        g.length = len + 1;
        g.word = ball->elems_[w].word;
        g.word.push_back(s);
        ball->index_.emplace(prod, id);
        g.matrix = std::move(prod);
        ball->elems_.push_back(std::move(g));
        ball->rmult_.emplace_back(r, kNoElement);
        ball->rmult_[w][s] = id;
      } else {
        ball->complete_ = false;  // product of length radius+1 exists
      }
    }
  }

  int n = ball->size();
  ball->inverse_.resize(n);
  for (ElementId id = 0; id < n; ++id) {
    std::vector<int> rev(ball->elems_[id].word.rbegin(), ball->elems_[id].word.rend());
    ElementId inv = ball->from_word(rev);
    if (inv == kNoElement) throw InternalError("inverse left the ball");
    ball->inverse_[id] = inv;
  }

  ball->is_refl_.resize(n);
  for (ElementId id = 0; id < n; ++id)
    ball->is_refl_[id] = (ball->elems_[id].length % 2 == 1) && is_reflection_matrix(ball->elems_[id].matrix);

  // Bruhat order: x is covered by y iff l(y) = l(x)+1 and y x^{-1} is a
  // reflection; <= is the reflexive-transitive closure, accumulated down
  // the BFS layers as a union of cover bitsets.
  ball->below_.assign(n, std::vector<bool>(n, false));
  for (ElementId y = 0; y < n; ++y) {
    ball->below_[y][y] = true;
    if (ball->elems_[y].length == 0) continue;
    for (ElementId x = 0; x < n; ++x) {
      if (ball->elems_[x].length != ball->elems_[y].length - 1) continue;
      FMatrix q = mat_mul(ball->elems_[y].matrix, ball->elems_[ball->inverse_[x]].matrix);
      if (is_reflection_matrix(q)) {
        for (ElementId z = 0; z <= x; ++z)
          if (ball->below_[x][z]) ball->below_[y][z] = true;
      }
    }
  }
  return ball;
}

ElementId Ball::from_word(const std::vector<int>& word) const {
  ElementId cur = 0;
  for (int s : word) {
    if (s < 0 || s >= system_->rank()) throw ValidationError("generator index out of range");
    cur = rmult_[cur][s];
    if (cur == kNoElement) return kNoElement;
  }
  return cur;
}

std::optional<ElementId> Ball::find(const FMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<ElementId> Ball::lower_interval(ElementId x) const {
  std::vector<ElementId> out;
  for (ElementId y = 0; y <= x; ++y)
    if (below_[x][y]) out.push_back(y);
  return out;
}

std::vector<ElementId> Ball::reflections() const {
  std::vector<ElementId> out;
  for (ElementId id = 0; id < size(); ++id)
    if (is_refl_[id]) out.push_back(id);
  return out;
}

std::string Ball::word_string(ElementId id) const {
  const auto& word = elems_[id].word;
  if (word.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << ' ';
    os << system_->generator_name(word[i]);
  }
  return os.str();
}

std::optional<ElementId> Ball::parse_word(const std::string& text) const {
  std::istringstream is(text);
  std::vector<int> word;
  std::string tok;
  while (is >> tok) {
    if (tok == "e") continue;
    int s = system_->generator_index(tok);
    if (s < 0) throw ValidationError("unknown generator '" + tok + "'");
    word.push_back(s);
  }
  ElementId id = from_word(word);
  if (id == kNoElement) return std::nullopt;
  return id;
}

int MomentGraph::vertex_pos(ElementId id) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
  if (it == vertices.end() || *it != id) return -1;
  return static_cast<int>(it - vertices.begin());
}

MomentGraph interval_graph(const BallPtr& ball, ElementId x) {
  MomentGraph g;
  g.ball = ball;
  g.apex = x;
  g.vertices = ball->lower_interval(x);
  int nv = static_cast<int>(g.vertices.size());
  g.edges_out.resize(nv);
  g.edges_in.resize(nv);
  for (int a = 0; a < nv; ++a) {
    for (int b = 0; b < nv; ++b) {
      int gap = ball->length(g.vertices[b]) - ball->length(g.vertices[a]);
      if (gap <= 0 || gap % 2 == 0) continue;
      FMatrix q = mat_mul(ball->element(g.vertices[b]).matrix,
                          ball->element(ball->inverse(g.vertices[a])).matrix);
      if (!is_reflection_matrix(q)) continue;
      MomentGraph::Edge edge;
      edge.lower = a;
      edge.upper = b;
      edge.label = reflection_root(ball->system()->field(), q);
      g.edges_out[a].push_back(static_cast<int>(g.edges.size()));
      g.edges_in[b].push_back(static_cast<int>(g.edges.size()));
      g.edges.push_back(std::move(edge));
    }
  }
  return g;
}

}  // namespace klsheaf
