#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ccrfock/bogoliubov.hpp"
#include "ccrfock/decomposition.hpp"
#include "ccrfock/disk.hpp"
#include "ccrfock/implementer.hpp"
#include "ccrfock/suite.hpp"
#include "ccrfock/types.hpp"

namespace ccrfock {

// Insertion-ordered objects so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

// Complex matrices are nested row-major arrays. On input each entry may be a
// plain number (imaginary part zero) or an [re, im] pair; output always emits
// pairs. Parse problems throw Error, shape problems ShapeError.
Json matrix_json(const Matrix& a);
Matrix matrix_from_json(const Json& j);

// {"m", "M", "matrix"} on output. Input additionally accepts
// {"blocks": {"A": <M x m>, "B": <M x m>}} for the top row (V11, V12); the
// bottom row is filled in by conjugation. The result is always validated.
Json bogoliubov_json(const BogoliubovOperator& v);
BogoliubovOperator bogoliubov_from_json(const Json& j,
                                        double tol = kTolStructural);

Json disk_json(const DiskPoint& z);
DiskPoint disk_from_json(const Json& j, double tol = kTolComposite);

Json hamiltonian_json(const QuadraticHamiltonian& h);
Json decomposition_json(const Decomposition& d);

// Small summary of a built implementer family (no Fock-space matrices):
// dimensions, normalization constant, disk coordinate, quadratic kernel and
// the generator basis.
Json family_summary_json(const ImplementerFamily& family);

Json suite_config_json(const SuiteConfig& c);
Json check_json(const CheckResult& r);

// Envelope written by the command line tool: schema tag, invoked command,
// hash of the canonicalized input, effective configuration, per-check
// results, overall verdict.
Json report_json(const std::string& command, const Json& input,
                 const SuiteConfig& config,
                 const std::vector<CheckResult>& checks);

std::uint64_t fnv1a(const std::string& bytes);
// "fnv1a:<16 hex digits>" over the key-sorted compact dump of j.
std::string canonical_hash(const Json& j);

// Two-space indent plus trailing newline.
std::string dump_pretty(const Json& j);

Json load_json_file(const std::string& path);
// path "-" writes to stdout.
void write_json_file(const std::string& path, const Json& j);

}  // namespace ccrfock
