#ifndef MONOUNION_IO_HPP_
#define MONOUNION_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include "monounion/growth.hpp"
#include "monounion/persistence.hpp"
#include "monounion/spec.hpp"
#include "monounion/validate.hpp"
#include "monounion/weights.hpp"

namespace monounion {

// Document format, shared by specs, reports, and certificates:
// a JSON object with a "format": 1 version field. All rationals serialize
// as numerator/denominator integer pairs; every serializer emits a
// byte-stable document (fixed key order, two-space indent, one trailing
// newline).

// Parses a spec document: {"format": 1, "generators": [names...],
// "products": [{"left", "right", "result_gen", "result_exp"}...]}.
// Throws DocumentError on malformed JSON or a table that fails the
// structural checks.
SemigroupSpec parse_spec(const std::string& text);

std::string serialize_spec(const SemigroupSpec& spec);

struct LoadedSpec {
  SemigroupSpec spec;
  std::string digest;  // content hash of the raw file bytes
};

LoadedSpec load_spec_file(const std::string& path);

std::string sha256_hex(const std::string& bytes);

std::string serialize_validation(const SemigroupSpec& spec,
                                 const ValidationReport& report,
                                 const std::string& digest);

// Everything cmd_analyze computes, bundled for serialization and reuse.
struct Analysis {
  PersistenceGraph graph;
  Condensation cond;
  Weights weights;
  std::vector<Trajectory> trajectories;  // per (sample, letter)
};

std::string serialize_analysis(const SemigroupSpec& spec, const Analysis& a,
                               const std::string& digest);

std::string serialize_certificate(const SemigroupSpec& spec,
                                  const PersistenceGraph& graph,
                                  const GrowthCertificate& cert,
                                  const std::string& digest);

// Header exactly "m,count,bound".
std::string ball_table_csv(const GrowthCertificate& cert);

// Header exactly "m,count"; the BFS-only export.
std::string growth_csv(const std::vector<std::pair<exp_t, std::int64_t>>& rows);

}  // namespace monounion

#endif  // MONOUNION_IO_HPP_
