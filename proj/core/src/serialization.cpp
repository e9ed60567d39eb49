#include "ccrfock/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace ccrfock {

namespace {

Complex entry_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  throw Error("matrix entry must be a number or an [re, im] pair");
}

int require_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw Error(std::string("missing integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

}  // namespace

Json matrix_json(const Matrix& a) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      row.push_back(Json::array({a(i, j).real(), a(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw Error("matrix must be a non-empty array of rows");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) {
    throw Error("matrix rows must be non-empty arrays");
  }
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ShapeError("matrix rows have inconsistent lengths");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      out(i, k) = entry_from_json(row[static_cast<std::size_t>(k)]);
    }
  }
  return out;
}

Json bogoliubov_json(const BogoliubovOperator& v) {
  Json j;
  j["m"] = v.m();
  j["M"] = v.M();
  j["matrix"] = matrix_json(v.matrix());
  return j;
}

BogoliubovOperator bogoliubov_from_json(const Json& j, double tol) {
  if (!j.is_object()) throw Error("operator description must be an object");
  Matrix full;
  if (j.contains("matrix")) {
    full = matrix_from_json(j["matrix"]);
  } else if (j.contains("blocks")) {
    const Json& blocks = j["blocks"];
    if (!blocks.is_object() || !blocks.contains("A") || !blocks.contains("B")) {
      throw Error("\"blocks\" must contain matrices \"A\" and \"B\"");
    }
    const Matrix a = matrix_from_json(blocks["A"]);
    const Matrix b = matrix_from_json(blocks["B"]);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw ShapeError("blocks \"A\" and \"B\" must have equal shape");
    }
    full.resize(2 * a.rows(), 2 * a.cols());
    full << a, b, b.conjugate(), a.conjugate();
  } else {
    throw Error("operator description needs \"matrix\" or \"blocks\"");
  }
  if (full.rows() % 2 != 0 || full.cols() % 2 != 0) {
    throw ShapeError("doubled matrix must have even dimensions");
  }
  const int m = static_cast<int>(full.cols()) / 2;
  const int M = static_cast<int>(full.rows()) / 2;
  if (j.contains("m") && require_int(j, "m") != m) {
    throw ShapeError("field \"m\" disagrees with the matrix shape");
  }
  if (j.contains("M") && require_int(j, "M") != M) {
    throw ShapeError("field \"M\" disagrees with the matrix shape");
  }
  return BogoliubovOperator::validate(full, m, M, tol);
}

Json disk_json(const DiskPoint& z) {
  Json j;
  j["M"] = static_cast<int>(z.matrix().rows());
  j["Z"] = matrix_json(z.matrix());
  return j;
}

DiskPoint disk_from_json(const Json& j, double tol) {
  if (!j.is_object() || !j.contains("Z")) {
    throw Error("disk point description needs a matrix field \"Z\"");
  }
  const Matrix z = matrix_from_json(j["Z"]);
  if (j.contains("M") && require_int(j, "M") != static_cast<int>(z.rows())) {
    throw ShapeError("field \"M\" disagrees with the shape of Z");
  }
  return DiskPoint(z, tol);
}

Json hamiltonian_json(const QuadraticHamiltonian& h) {
  Json j;
  j["H11"] = matrix_json(h.h11());
  j["H12"] = matrix_json(h.h12());
  j["H21"] = matrix_json(h.h21());
  return j;
}

Json decomposition_json(const Decomposition& d) {
  Json j;
  j["P_plus"] = matrix_json(d.p_kernel);
  j["P_V"] = matrix_json(d.p_v.matrix());
  j["Z_V"] = disk_json(d.z_v);
  j["U_V"] = bogoliubov_json(d.u_v);
  j["W_V"] = bogoliubov_json(d.w_v);
  return j;
}

Json family_summary_json(const ImplementerFamily& family) {
  Json j;
  j["m"] = family.v.m();
  j["M"] = family.v.M();
  j["index"] = family.v.index();
  j["cutoff"] = family.target.cutoff();
  j["source_dim"] = family.source.dim();
  j["target_dim"] = family.target.dim();
  j["generators"] = family.generators();
  j["normalization"] = family.normalization;
  j["Z_V"] = disk_json(family.decomposition.z_v);
  j["H"] = hamiltonian_json(family.h);
  if (family.generators() > 0) j["f_basis"] = matrix_json(family.f_basis);
  return j;
}

Json suite_config_json(const SuiteConfig& c) {
  Json j;
  j["cutoff"] = c.cutoff;
  j["tol_structural"] = c.tol_structural;
  j["tol_composite"] = c.tol_composite;
  j["tol_truncation"] = c.tol_truncation;
  j["seed"] = c.seed;
  j["max_alpha_len"] = c.max_alpha_len;
  return j;
}

Json check_json(const CheckResult& r) {
  Json j;
  j["name"] = r.name;
  // JSON has no infinity; a check that threw reports null plus its note.
  if (std::isfinite(r.residual)) {
    j["residual"] = r.residual;
  } else {
    j["residual"] = nullptr;
  }
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json report_json(const std::string& command, const Json& input,
                 const SuiteConfig& config,
                 const std::vector<CheckResult>& checks) {
  Json j;
  j["schema"] = "ccr-fock/1";
  j["command"] = command;
  j["input_hash"] = canonical_hash(input);
  j["config"] = suite_config_json(config);
  Json list = Json::array();
  bool overall = true;
  for (const CheckResult& r : checks) {
    list.push_back(check_json(r));
    overall = overall && r.pass;
  }
  j["checks"] = std::move(list);
  j["overall"] = overall;
  return j;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string canonical_hash(const Json& j) {
  // Re-parse into the key-sorted container so the hash does not depend on
  // insertion order.
  const nlohmann::json sorted = nlohmann::json::parse(j.dump());
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                static_cast<unsigned long long>(fnv1a(sorted.dump())));
  return buf;
}

std::string dump_pretty(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("invalid JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  if (path == "-") {
    std::cout << dump_pretty(j);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << dump_pretty(j);
  if (!out) throw Error("failed writing " + path);
}

}  // namespace ccrfock
