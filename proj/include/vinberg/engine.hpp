#pragma once

// Vinberg's algorithm: basepoint, stabilizer chamber, the root search in
// order of increasing distance from the basepoint, and the run loop.

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vinberg/coxeter.hpp"
#include "vinberg/enumerate.hpp"
#include "vinberg/lattice.hpp"

namespace vinberg {

struct RunConfig {
  size_t max_roots = 1000;
  /// Number of (norm, height) shells to search; 0 means no limit.
  size_t max_norm_shells = 0;
  /// Stop once the priority k^2/s of the search exceeds this value.
  std::optional<FieldElement> max_priority;
  /// Run the finite-volume test after this many new roots (and at the end
  /// of every shell that produced roots).
  size_t check_interval = 1;
  unsigned threads = 1;
  /// Wall-clock limit in seconds, checked between shells; 0 means none.
  /// A run stopped by it is no longer reproducible.
  double max_seconds = 0;
  /// Linear functional picking the stabilizer chamber; empty for the
  /// default (dim, dim-1, ..., 1).
  std::vector<long> chamber_weights;
};

enum class Outcome { Reflective, Inconclusive };

struct PolyhedronReport {
  std::vector<Root> roots;
  CoxeterDiagram diagram;
  bool finite_volume = false;
  bool compact = false;
  size_t ordinary_vertices = 0;
  size_t ideal_vertices = 0;
  size_t faces = 0;
  Integer symmetry_order = 0;  // 0 when not computed
};

struct RunVerdict {
  Outcome outcome = Outcome::Inconclusive;
  FieldVector basepoint;
  size_t stabilizer_roots = 0;
  PolyhedronReport polyhedron;
  /// Which cap stopped an inconclusive run.
  std::string cap_hit;
  size_t shells_searched = 0;
  double seconds = 0;
};

/// Validates a supplied basepoint or searches small lattice vectors for a
/// timelike one.
FieldVector choose_basepoint(const GramForm& f, const std::optional<FieldVector>& supplied = std::nullopt);

/// Walls of one chamber of the finite reflection group generated by the
/// roots orthogonal to u0. A root e is oriented so that w . e < 0 for the
/// weight vector w.
std::vector<Root> stabilizer_chamber(const GramForm& f, const FieldVector& u0, std::vector<long> weights = {});

/// Priority k^2/s of a root; its distance from u0 grows with it.
FieldElement root_priority(const Root& r, const GramForm& f, const FieldVector& u0);

/// Stateful root search. The roots passed in must contain the stabilizer
/// chamber; they bound the enumeration cone.
class VinbergSearch {
 public:
  VinbergSearch(const GramForm& f, FieldVector u0, std::vector<Root> accepted, const RunConfig& cfg = {});

  enum class Step { Root, ShellEnd, Cap };
  /// Advances to the next accepted root, the end of a shell that produced
  /// roots, or a cap.
  Step step();
  /// The accepted root after Step::Root.
  const Root& last() const { return accepted_.back(); }
  const std::vector<Root>& roots() const { return accepted_; }
  const std::string& cap() const { return cap_; }
  size_t shells_searched() const { return shells_searched_; }

 private:
  struct Shell {
    RingElement s;
    FieldElement k;
    FieldElement priority;
  };
  void next_band();
  bool admissible_candidate(const Vector& e) const;

  const GramForm* form_;
  FieldVector u0_;
  FieldElement u0_norm_;
  FieldElement height_unit_;  // generator of the ideal of values (e, u0)
  RunConfig cfg_;
  std::vector<Root> accepted_;
  std::vector<Vector> cone_;
  std::vector<Vector> walls_;  // accepted roots off the stabilizer
  std::unique_ptr<ShellEnumerator> enumerator_;

  FieldElement band_lo_, band_hi_;
  std::vector<Shell> pending_;
  size_t pending_pos_ = 0;
  std::vector<Vector> current_;
  size_t current_pos_ = 0;
  bool in_shell_ = false;
  bool shell_found_ = false;
  size_t shells_searched_ = 0;
  std::string cap_;
  std::chrono::steady_clock::time_point start_;
};

/// The first root after the accepted ones; nullopt when the caps in cfg are
/// exhausted first.
std::optional<Root> next_root(const GramForm& f, const FieldVector& u0, const std::vector<Root>& accepted,
                              const RunConfig& cfg = {});

/// Full pipeline. Throws when the form is not admissible.
RunVerdict run(const GramForm& f, const RunConfig& cfg = {}, const std::optional<FieldVector>& basepoint = std::nullopt);

}  // namespace vinberg
