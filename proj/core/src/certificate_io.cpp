#include "slicetorus/certificate_io.hpp"

#include <stdexcept>
#include <type_traits>

namespace slicetorus {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <class T>
T field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw std::invalid_argument(std::string("move lacks field '") + name + "'");
  if constexpr (std::is_unsigned_v<T>) {
    if (!it->is_number_unsigned()) {
      throw std::invalid_argument(std::string("move field '") + name + "' must be a non-negative integer");
    }
  } else if constexpr (std::is_integral_v<T>) {
    if (!it->is_number_integer()) {
      throw std::invalid_argument(std::string("move field '") + name + "' must be an integer");
    }
  }
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("move field '") + name + "' has the wrong type");
  }
}

}  // namespace

Json move_to_json(const Move& move) {
  Json j;
  j["type"] = move_type_name(move);
  std::visit(Overloaded{
                 [&](const SaddleInsert& m) {
                   j["position"] = m.position;
                   j["letter"] = m.letter;
                 },
                 [&](const SaddleDelete& m) { j["position"] = m.position; },
                 [&](const InsertCancelingPair& m) {
                   j["position"] = m.position;
                   j["generator"] = m.generator;
                   j["order"] = m.order;
                 },
                 [&](const DeleteCancelingPair& m) { j["position"] = m.position; },
                 [&](const BraidRelation& m) {
                   j["position"] = m.position;
                   j["direction"] = m.direction;
                 },
                 [&](const Commutation& m) { j["position"] = m.position; },
                 [&](const Conjugate& m) { j["letter"] = m.letter; },
                 [](const CyclicShift&) {},
                 [&](const Stabilize& m) { j["sign"] = m.sign; },
                 [](const Destabilize&) {},
             },
             move);
  return j;
}

Move move_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("move must be a JSON object");
  const auto type = field<std::string>(j, "type");
  if (type == "saddle_insert") {
    return SaddleInsert{field<std::size_t>(j, "position"), field<int>(j, "letter")};
  }
  if (type == "saddle_delete") return SaddleDelete{field<std::size_t>(j, "position")};
  if (type == "insert_canceling_pair") {
    return InsertCancelingPair{field<std::size_t>(j, "position"), field<int>(j, "generator"),
                               field<int>(j, "order")};
  }
  if (type == "delete_canceling_pair") return DeleteCancelingPair{field<std::size_t>(j, "position")};
  if (type == "braid_relation") {
    return BraidRelation{field<std::size_t>(j, "position"), field<int>(j, "direction")};
  }
  if (type == "commutation") return Commutation{field<std::size_t>(j, "position")};
  if (type == "conjugate") return Conjugate{field<int>(j, "letter")};
  if (type == "cyclic_shift") return CyclicShift{};
  if (type == "stabilize") return Stabilize{field<int>(j, "sign")};
  if (type == "destabilize") return Destabilize{};
  throw std::invalid_argument("unknown move type '" + type + "'");
}

Json certificate_to_json(const CobordismCertificate& certificate) {
  Json moves = Json::array();
  for (const auto& m : certificate.moves) moves.push_back(move_to_json(m));
  Json j;
  j["start"] = render_braid(certificate.start);
  j["moves"] = std::move(moves);
  return j;
}

CobordismCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("certificate must be a JSON object");
  auto start = j.find("start");
  if (start == j.end() || !start->is_string()) {
    throw std::invalid_argument("certificate lacks a string 'start'");
  }
  CobordismCertificate cert{parse_braid(start->get<std::string>()), {}};
  auto moves = j.find("moves");
  if (moves == j.end() || !moves->is_array()) {
    throw std::invalid_argument("certificate lacks a 'moves' array");
  }
  for (const auto& m : *moves) cert.moves.push_back(move_from_json(m));
  return cert;
}

std::vector<CobordismCertificate> certificates_from_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
  }
  std::vector<CobordismCertificate> out;
  if (doc.is_array()) {
    for (const auto& item : doc) out.push_back(certificate_from_json(item));
  } else {
    out.push_back(certificate_from_json(doc));
  }
  return out;
}

Json verification_report(const VerifiedCobordism& verified) {
  Json j;
  j["start"] = render_braid(verified.start_word);
  j["end"] = render_braid(verified.end_word);
  j["saddle_count"] = verified.saddle_count;
  j["genus"] = verified.genus ? Json(format_rational(*verified.genus)) : Json(nullptr);
  j["connected"] = verified.connected;
  j["start_components"] = verified.start_components;
  j["end_components"] = verified.end_components;
  return j;
}

}  // namespace slicetorus
