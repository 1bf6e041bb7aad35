#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ncycle/embedding.hpp"

namespace ncycle {

// Embedding files are JSON:
//
//   {
//     "n": 4,
//     "corners": [["0/1", "0/1"], ["2/1", "2/1"], ["2/1", "0/1"], ["0/1", "2/1"]]
//   }
//
// Coordinates are exact "p/q" strings. Writing always emits lowest terms, so
// parse(serialize(e)) == e and serialize(parse(s)) == s for any written s.

std::string serialize_embedding(const CycleEmbedding& emb);

/// Throws ParseError on malformed documents, a count mismatch, or n < 3.
CycleEmbedding parse_embedding(std::string_view text);

/// Throws IoError when the file cannot be written.
void write_embedding_file(const std::filesystem::path& path, const CycleEmbedding& emb);

/// Throws IoError when the file cannot be read, ParseError on bad content.
CycleEmbedding read_embedding_file(const std::filesystem::path& path);

}  // namespace ncycle
