#include "ncycle/embedding_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ncycle {

using nlohmann::json;

std::string serialize_embedding(const CycleEmbedding& emb) {
  // Hand-formatted so each corner stays on one line.
  std::ostringstream out;
  out << "{\n  \"n\": " << emb.size() << ",\n  \"corners\": [\n";
  for (std::size_t i = 0; i < emb.size(); ++i) {
    const auto& p = emb.corner(i);
    out << "    [" << json(p.x.str()).dump() << ", " << json(p.y.str()).dump() << "]"
        << (i + 1 < emb.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

CycleEmbedding parse_embedding(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("embedding file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("corners")) {
    throw ParseError("embedding file needs fields \"n\" and \"corners\"");
  }
  if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const auto n = doc["n"].get<std::int64_t>();
  const auto& corners = doc["corners"];
  if (!corners.is_array()) throw ParseError("\"corners\" must be an array");
  if (n < 3) throw ParseError("\"n\" must be at least 3");
  if (static_cast<std::int64_t>(corners.size()) != n) {
    throw ParseError("\"n\" is " + std::to_string(n) + " but " + std::to_string(corners.size()) +
                     " corners are listed");
  }

  std::vector<Point> pts;
  pts.reserve(corners.size());
  for (const auto& c : corners) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
      throw ParseError("each corner must be a pair of \"p/q\" strings");
    }
    try {
      pts.push_back(Point{Rational::parse(c[0].get<std::string>()), Rational::parse(c[1].get<std::string>())});
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return CycleEmbedding(std::move(pts));
}

void write_embedding_file(const std::filesystem::path& path, const CycleEmbedding& emb) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << serialize_embedding(emb);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

CycleEmbedding read_embedding_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return parse_embedding(buf.str());
}

}  // namespace ncycle
