#pragma once

// Coxeter diagrams of root configurations: edge labels, elliptic and
// parabolic subdiagrams, the finite-volume test and diagram symmetries.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vinberg/cyclotomic.hpp"
#include "vinberg/lattice.hpp"

namespace vinberg {

enum class EdgeKind { Orthogonal, Weight, Thick, Dashed };

struct EdgeLabel {
  EdgeKind kind = EdgeKind::Orthogonal;
  int m = 2;  // the weight for Weight, 2 for Orthogonal, 0 otherwise

  static EdgeLabel orthogonal() { return {EdgeKind::Orthogonal, 2}; }
  static EdgeLabel weight(int m) { return {EdgeKind::Weight, m}; }
  static EdgeLabel thick() { return {EdgeKind::Thick, 0}; }
  static EdgeLabel dashed() { return {EdgeKind::Dashed, 0}; }

  /// "2", "3", ..., "inf", "dashed"
  std::string str() const;
  static EdgeLabel parse(const std::string& text);
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/// Largest m with a recognized dihedral angle pi/m.
inline constexpr int kMaxWeight = 12;

/// Label for q = 4 (e_i,e_j)^2 / (s_i s_j). Throws "unrecognized dihedral
/// angle" when q < 4 is not 4 cos^2(pi/m) for m in 2..12.
EdgeLabel label_from_q(const FieldElement& q);
EdgeLabel label_edge(const Root& a, const Root& b, const GramForm& f);

/// What the finite-volume search needs from a diagram.
class DiagramView {
 public:
  virtual ~DiagramView() = default;
  /// Hyperbolic dimension.
  virtual size_t n() const = 0;
  virtual size_t size() const = 0;
  /// -(e_i,e_j)/sqrt(s_i s_j) under the identity embedding.
  virtual long double cosine(size_t i, size_t j) const = 0;
  virtual bool adjacent(size_t i, size_t j) const = 0;
  /// Exact class of a vertex set: 1 positive definite, 0 positive
  /// semidefinite of nullity one, -1 otherwise.
  virtual int definiteness(const std::vector<size_t>& subset) const = 0;
  /// False when the configuration cannot bound a hyperbolic polyhedron.
  virtual bool hyperbolic() const { return true; }
};

class CoxeterDiagram : public DiagramView {
 public:
  CoxeterDiagram() = default;
  /// Throws when some pair has (e_i,e_j) > 0 or an unrecognized angle.
  CoxeterDiagram(const GramForm& f, std::vector<Root> roots);

  /// Appends a root, labelling it against every existing vertex.
  void add_root(const Root& r);

  const GramForm& form() const { return *form_; }
  size_t n() const override { return form_->n(); }
  size_t size() const override { return roots_.size(); }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(size_t i) const { return roots_[i]; }
  const RingElement& gram(size_t i, size_t j) const { return gram_[i][j]; }
  const EdgeLabel& label(size_t i, size_t j) const { return labels_[i][j]; }
  /// Normalized cosine -(e_i,e_j)/sqrt(s_i s_j) under the identity embedding.
  long double cosine(size_t i, size_t j) const override { return cosine_[i][j]; }
  bool adjacent(size_t i, size_t j) const override { return i != j && !gram_[i][j].is_zero(); }
  int definiteness(const std::vector<size_t>& subset) const override;

  RingMatrix gram_matrix(const std::vector<size_t>& subset) const;

 private:
  std::shared_ptr<const GramForm> form_;
  std::vector<Root> roots_;
  std::vector<std::vector<RingElement>> gram_;
  std::vector<std::vector<EdgeLabel>> labels_;
  std::vector<std::vector<long double>> cosine_;
};

CoxeterDiagram build_diagram(const std::vector<Root>& roots, const GramForm& f);

/// A Coxeter diagram given only by its labels (no dashed edges), with
/// normalized Gram entries -2cos(pi/m) evaluated exactly in Q(zeta_N).
class LabelDiagram : public DiagramView {
 public:
  LabelDiagram(size_t n, std::vector<std::vector<EdgeLabel>> labels);

  size_t n() const override { return n_; }
  size_t size() const override { return labels_.size(); }
  long double cosine(size_t i, size_t j) const override;
  bool adjacent(size_t i, size_t j) const override { return i != j && labels_[i][j].kind != EdgeKind::Orthogonal; }
  int definiteness(const std::vector<size_t>& subset) const override;
  /// Requires signature (n,1) of the full normalized Gram matrix; decided for
  /// simplices (n+1 vertices) only.
  bool hyperbolic() const override;

  const EdgeLabel& label(size_t i, size_t j) const { return labels_[i][j]; }
  const CyclotomicField& field() const { return field_; }
  /// Twice the normalized Gram matrix: 2 on the diagonal, -2cos(pi/m) off it.
  std::vector<std::vector<CyclotomicField::Poly>> matrix(const std::vector<size_t>& subset) const;

 private:
  size_t n_;
  std::vector<std::vector<EdgeLabel>> labels_;
  CyclotomicField field_;
};

/// Triangle group diagram with angles pi/p, pi/q, pi/r (0 stands for
/// infinity).
LabelDiagram triangle_diagram(int p, int q, int r);

enum class SubdiagramKind { Elliptic, Parabolic, Other };

struct SubdiagramClass {
  SubdiagramKind kind = SubdiagramKind::Other;
  size_t rank = 0;
  size_t components = 0;
};

/// Connected components of the subset in the non-orthogonality graph.
size_t count_components(const DiagramView& d, const std::vector<size_t>& subset);
SubdiagramClass classify_subdiagram(const CoxeterDiagram& d, const std::vector<size_t>& subset);

struct FiniteVolumeReport {
  bool finite_volume = false;
  bool compact = false;
  size_t ordinary_vertices = 0;
  size_t ideal_vertices = 0;
  size_t edges = 0;
  std::string reason;
};

/// Finite-volume test: walks the edge graph of the polyhedron from one
/// vertex and requires every edge to end in exactly two vertices (ordinary
/// or ideal). Classifications of connected subdiagrams are cached, so a
/// checker kept alive while roots are appended to the diagram stays cheap.
class VolumeChecker {
 public:
  explicit VolumeChecker(const DiagramView& d);
  FiniteVolumeReport check();

 private:
  using Key = std::vector<uint32_t>;
  struct KeyHash {
    size_t operator()(const Key& k) const noexcept;
  };
  enum class Kind : uint8_t { Elliptic, Affine, Other };
  struct Vertex {
    Key roots;
    bool ideal = false;
  };

  Kind classify(const Key& connected);
  std::vector<Key> components(const Key& set) const;
  std::optional<Vertex> find_vertex();
  std::vector<Vertex> endpoints(const Key& edge);

  const DiagramView* d_;
  size_t n_;
  std::unordered_map<Key, Kind, KeyHash> cache_;
};

/// One-shot check with a fresh cache.
FiniteVolumeReport check_finite_volume(const DiagramView& d);

struct AutomorphismGroup {
  Integer order = 1;
  std::vector<std::vector<size_t>> generators;
};

/// Permutations preserving every entry of the normalized Gram matrix, i.e.
/// the symmetries of the diagram including dashed weights.
AutomorphismGroup diagram_automorphisms(const CoxeterDiagram& d);

enum class DiagramFormat { Dot, Text, Json };
DiagramFormat parse_diagram_format(const std::string& name);
std::string export_diagram(const CoxeterDiagram& d, DiagramFormat format);
/// Rebuilds a diagram from its JSON export over the given form and checks
/// that every stored label is reproduced.
CoxeterDiagram diagram_from_json(const std::string& text, const GramForm& f);

}  // namespace vinberg
