#include "qdistill/io.hpp"

#include <fstream>

namespace qdistill {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const std::string& field, const char* context) {
  if (!j.contains(field))
    throw ValidationError(std::string(context) + ": missing field '" + field + "'");
  return j.at(field);
}

int require_int(const json& j, const std::string& field, const char* context) {
  const json& v = require_field(j, field, context);
  if (!v.is_number_integer())
    throw ValidationError(std::string(context) + ": field '" + field + "' must be an integer");
  return v.get<int>();
}

RealVector read_prob_array(const json& v, Index expected, const std::string& field,
                           const char* context) {
  if (!v.is_array() || static_cast<Index>(v.size()) != expected)
    throw ValidationError(std::string(context) + ": field '" + field + "' must be an array of " +
                          std::to_string(expected) + " probabilities");
  RealVector out(expected);
  for (Index i = 0; i < expected; ++i) {
    if (!v[i].is_number())
      throw ValidationError(std::string(context) + ": field '" + field + "' entry " +
                            std::to_string(i) + " is not a number");
    out[i] = v[i].get<Real>();
  }
  return out;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("file " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

PauliDistribution load_noise_json(const json& j) {
  const char* ctx = "noise model";
  if (!j.is_object()) throw ValidationError("noise model: top level must be an object");
  const int d = require_int(j, "d", ctx);
  const int n = require_int(j, "n", ctx);
  if (d < 2) throw ValidationError("noise model: field 'd' must be >= 2");
  if (n < 1) throw ValidationError("noise model: field 'n' must be >= 1");
  const json& form = require_field(j, "form", ctx);
  if (!form.is_string()) throw ValidationError("noise model: field 'form' must be a string");
  const std::string kind = form.get<std::string>();
  const Index letters = static_cast<Index>(d) * d;

  try {
    if (kind == "iid") {
      return PauliDistribution::iid(
          d, n, read_prob_array(require_field(j, "single_letter", ctx), letters, "single_letter", ctx));
    }
    if (kind == "markov") {
      const RealVector initial =
          read_prob_array(require_field(j, "initial", ctx), letters, "initial", ctx);
      const json& rows = require_field(j, "transition", ctx);
      if (!rows.is_array() || static_cast<Index>(rows.size()) != letters)
        throw ValidationError("noise model: field 'transition' must have d^2 rows");
      RealMatrix transition(letters, letters);
      for (Index u = 0; u < letters; ++u)
        transition.row(u) =
            read_prob_array(rows[u], letters, "transition[" + std::to_string(u) + "]", ctx)
                .transpose();
      return PauliDistribution::markov(d, n, initial, transition);
    }
    if (kind == "explicit") {
      const json& table = require_field(j, "table", ctx);
      if (!table.is_array()) throw ValidationError("noise model: field 'table' must be an array");
      const Index labels = checked_pow(d, 2 * n);
      RealVector probs = RealVector::Zero(labels);
      std::vector<bool> seen(static_cast<size_t>(labels), false);
      for (size_t e = 0; e < table.size(); ++e) {
        const json& entry = table[e];
        const std::string ectx = "noise model: table[" + std::to_string(e) + "]";
        if (!entry.is_object() || !entry.contains("label") || !entry.contains("p"))
          throw ValidationError(ectx + " must be an object with 'label' and 'p'");
        const json& label = entry["label"];
        if (!label.is_array() || static_cast<int>(label.size()) != n)
          throw ValidationError(ectx + ": 'label' must list n [x, z] letter pairs");
        IntVector coords(2 * n);
        for (int i = 0; i < n; ++i) {
          const json& letter = label[i];
          if (!letter.is_array() || letter.size() != 2 || !letter[0].is_number_integer() ||
              !letter[1].is_number_integer())
            throw ValidationError(ectx + ": letter " + std::to_string(i) + " must be [x, z]");
          const int x = letter[0].get<int>();
          const int z = letter[1].get<int>();
          if (x < 0 || x >= d || z < 0 || z >= d)
            throw ValidationError(ectx + ": letter " + std::to_string(i) + " out of range [0, d)");
          coords[2 * i] = x;
          coords[2 * i + 1] = z;
        }
        if (!entry["p"].is_number()) throw ValidationError(ectx + ": 'p' must be a number");
        const long long idx = ZdVec(d, coords).index();
        if (seen[static_cast<size_t>(idx)]) throw ValidationError(ectx + ": duplicate label");
        seen[static_cast<size_t>(idx)] = true;
        probs[idx] = entry["p"].get<Real>();
      }
      return PauliDistribution::explicit_table(d, n, std::move(probs));
    }
  } catch (const ValidationError&) {
    throw;
  }
  throw ValidationError("noise model: field 'form' must be one of iid | markov | explicit");
}

PauliDistribution load_noise_file(const std::string& path) {
  try {
    return load_noise_json(load_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError("noise file " + path + ": " + e.what());
  }
}

json noise_to_json(const PauliDistribution& dist) {
  json j;
  j["d"] = dist.d();
  j["n"] = dist.n();
  switch (dist.form()) {
    case PauliDistribution::Form::IID: {
      j["form"] = "iid";
      j["single_letter"] = std::vector<Real>(dist.single_letter().data(),
                                             dist.single_letter().data() + dist.single_letter().size());
      break;
    }
    case PauliDistribution::Form::Markov: {
      j["form"] = "markov";
      j["initial"] =
          std::vector<Real>(dist.initial().data(), dist.initial().data() + dist.initial().size());
      json rows = json::array();
      for (Index u = 0; u < dist.transition().rows(); ++u) {
        const RealVector row = dist.transition().row(u).transpose();
        rows.push_back(std::vector<Real>(row.data(), row.data() + row.size()));
      }
      j["transition"] = std::move(rows);
      break;
    }
    case PauliDistribution::Form::Explicit: {
      j["form"] = "explicit";
      const RealVector table = dist.to_explicit();
      json entries = json::array();
      for (Index idx = 0; idx < table.size(); ++idx) {
        if (table[idx] == 0.0) continue;
        const ZdVec x = ZdVec::from_index(dist.d(), dist.n(), idx);
        json label = json::array();
        for (int i = 0; i < dist.n(); ++i) label.push_back({x.x(i), x.z(i)});
        entries.push_back({{"label", std::move(label)}, {"p", table[idx]}});
      }
      j["table"] = std::move(entries);
      break;
    }
  }
  return j;
}

Subspace load_code_json(const json& j) {
  const char* ctx = "code spec";
  if (!j.is_object()) throw ValidationError("code spec: top level must be an object");
  const int d = require_int(j, "d", ctx);
  const int n = require_int(j, "n", ctx);
  if (!is_prime(d)) throw ValidationError("code spec: field 'd' must be prime");
  if (n < 1) throw ValidationError("code spec: field 'n' must be >= 1");
  const json& rows = require_field(j, "stabilizer_basis", ctx);
  if (!rows.is_array()) throw ValidationError("code spec: field 'stabilizer_basis' must be an array");
  std::vector<ZdVec> generators;
  for (size_t r = 0; r < rows.size(); ++r) {
    const json& row = rows[r];
    const std::string rctx = "code spec: stabilizer_basis[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != 2 * n)
      throw ValidationError(rctx + " must list 2n residues");
    IntVector coords(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
      if (!row[i].is_number_integer()) throw ValidationError(rctx + ": entries must be integers");
      const int v = row[i].get<int>();
      if (v < 0 || v >= d) throw ValidationError(rctx + ": entry " + std::to_string(i) + " out of range [0, d)");
      coords[i] = v;
    }
    generators.emplace_back(d, std::move(coords));
  }
  for (size_t a = 0; a < generators.size(); ++a)
    for (size_t b = a; b < generators.size(); ++b) {
      const int form = symplectic_form(generators[a], generators[b]);
      if (form != 0)
        throw ValidationError("code spec: stabilizer_basis vectors " + std::to_string(a) + " and " +
                              std::to_string(b) + " have symplectic form " + std::to_string(form) +
                              " (must be 0)");
    }
  return Subspace(d, n, generators);
}

Subspace load_code_file(const std::string& path) {
  try {
    return load_code_json(load_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError("code file " + path + ": " + e.what());
  }
}

json code_to_json(const Subspace& stabilizer) {
  json j;
  j["d"] = stabilizer.d();
  j["n"] = stabilizer.n();
  json rows = json::array();
  for (int r = 0; r < stabilizer.dim(); ++r) {
    const ZdVec v = stabilizer.basis_vector(r);
    std::vector<int> coords(v.coords().data(), v.coords().data() + v.size());
    rows.push_back(std::move(coords));
  }
  j["stabilizer_basis"] = std::move(rows);
  return j;
}

}  // namespace qdistill
