#include <cmath>
#include <string>

#include <json.hpp>

#include "qpol/states.hpp"

namespace qpol {

namespace {

using nlohmann::json;

constexpr double kNormTolerance = 1e-9;

TwoModeState parse_pure(const json& doc, bool renormalize) {
  const json& entries = doc.at("amplitudes");
  if (!entries.is_array()) throw ParseError("\"amplitudes\" must be an array");
  TwoModeState::AmplitudeMap map;
  double norm2 = 0.0;
  for (const json& entry : entries) {
    const FockIndex index{entry.at("n").get<int>(), entry.at("k").get<int>()};
    validate_index(index);
    const Complex value{entry.at("re").get<double>(), entry.value("im", 0.0)};
    if (!map.emplace(index, value).second) {
      throw InvalidState("duplicate amplitude (n=" + std::to_string(index.n) + ", k=" + std::to_string(index.k) + ")");
    }
    norm2 += std::norm(value);
  }
  if (!renormalize && std::abs(norm2 - 1.0) > kNormTolerance) {
    throw InvalidState("pure state is not normalized (sum |c|^2 = " + std::to_string(norm2) + ")");
  }
  return TwoModeState(std::move(map));
}

BlockDensity parse_block(const json& doc, bool renormalize) {
  const json& entries = doc.at("blocks");
  if (!entries.is_array()) throw ParseError("\"blocks\" must be an array");
  std::vector<Block> blocks;
  for (const json& entry : entries) {
    Block block;
    block.n = entry.at("n").get<int>();
    if (block.n < 0) throw IndexError("negative manifold " + std::to_string(block.n));
    block.p = entry.at("p").get<double>();
    const json& rows = entry.at("rho");
    const auto dim = static_cast<std::size_t>(block.n) + 1;
    if (!rows.is_array() || rows.size() != dim) throw ParseError("rho of block n=" + std::to_string(block.n) + " must have n+1 rows");
    block.rho = CMatrix(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const json& row = rows[r];
      if (!row.is_array() || row.size() != dim) throw ParseError("rho of block n=" + std::to_string(block.n) + " must have n+1 columns");
      for (std::size_t c = 0; c < dim; ++c) {
        const json& cell = row[c];
        if (!cell.is_array() || cell.size() != 2) throw ParseError("rho entries must be [re, im] pairs");
        block.rho(r, c) = Complex{cell[0].get<double>(), cell[1].get<double>()};
      }
    }
    blocks.push_back(std::move(block));
  }
  return renormalize ? BlockDensity::renormalized(std::move(blocks)) : BlockDensity(std::move(blocks));
}

json pure_document(const TwoModeState& state) {
  json amplitudes = json::array();
  for (const auto& [index, value] : state.amplitudes()) {
    amplitudes.push_back({{"n", index.n}, {"k", index.k}, {"re", value.real()}, {"im", value.imag()}});
  }
  return {{"kind", "pure"}, {"amplitudes", std::move(amplitudes)}};
}

json block_document(const BlockDensity& state) {
  json blocks = json::array();
  for (const Block& block : state.blocks()) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < block.rho.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < block.rho.cols(); ++c) row.push_back({block.rho(r, c).real(), block.rho(r, c).imag()});
      rows.push_back(std::move(row));
    }
    blocks.push_back({{"n", block.n}, {"p", block.p}, {"rho", std::move(rows)}});
  }
  return {{"kind", "block"}, {"blocks", std::move(blocks)}};
}

}  // namespace

AnyState load_state(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError("state document must be a JSON object");
    const std::string kind = doc.at("kind").get<std::string>();
    const bool renormalize = doc.value("renormalize", false);
    if (kind == "pure") return parse_pure(doc, renormalize);
    if (kind == "block") return parse_block(doc, renormalize);
    throw ParseError("unknown state kind \"" + kind + "\"");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed state document: ") + e.what());
  }
}

std::string save_state(const AnyState& state) {
  const json doc = std::visit(
      [](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, TwoModeState>) {
          return pure_document(s);
        } else {
          return block_document(s);
        }
      },
      state);
  return doc.dump(2);
}

}  // namespace qpol
