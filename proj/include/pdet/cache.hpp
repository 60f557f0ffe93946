#pragma once

// On-disk cache of characteristic-polynomial records, one text file per L:
//
//   pascal-charpoly v1 L=<L>
//   c_0
//   ...
//   c_L
//   sha256=<hex digest of all preceding lines, newlines included>
//
// Writes go to a temp file followed by an atomic rename, so readers never
// observe a partial file (single-writer, many-reader contract).

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "pdet/charpoly.hpp"
#include "pdet/numeric.hpp"

namespace pdet {

struct CacheError : Error {
  using Error::Error;
};
struct CacheMissing : CacheError {
  using CacheError::CacheError;
};
struct CacheChecksumMismatch : CacheError {
  using CacheError::CacheError;
};
struct CacheInvariantViolation : CacheError {
  using CacheError::CacheError;
};

namespace detail {

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* c = EVP_MD_CTX_new();
  if (!c || EVP_DigestInit_ex(c, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(c, data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(c, md, &len) != 1) {
    if (c) EVP_MD_CTX_free(c);
    throw CacheError("sha256 computation failed");
  }
  EVP_MD_CTX_free(c);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

}  // namespace detail

inline std::filesystem::path cache_file(const std::filesystem::path& dir, int L) {
  return dir / ("charpoly_L" + std::to_string(L) + ".txt");
}

inline void cache_store(const std::filesystem::path& dir, const CharPolyRecord& rec) {
  validate(rec);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ostringstream body;
  body << "pascal-charpoly v1 L=" << rec.L << "\n";
  for (const Int& c : rec.coeffs) body << c.str() << "\n";
  std::string payload = body.str();
  std::string digest = detail::sha256_hex(payload);

  std::filesystem::path final_path = cache_file(dir, rec.L);
  std::filesystem::path tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cache_store: cannot open " + tmp.string());
    out << payload << "sha256=" << digest << "\n";
    if (!out.flush()) throw CacheError("cache_store: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) throw CacheError("cache_store: atomic rename failed: " + ec.message());
}

inline CharPolyRecord cache_load(const std::filesystem::path& dir, int L) {
  std::filesystem::path path = cache_file(dir, L);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheMissing("cache_load: no entry for L=" + std::to_string(L));

  std::string line;
  std::string payload;
  if (!std::getline(in, line)) throw CacheChecksumMismatch("cache_load: empty file " + path.string());
  if (line != "pascal-charpoly v1 L=" + std::to_string(L))
    throw CacheChecksumMismatch("cache_load: bad header in " + path.string());
  payload = line + "\n";

  CharPolyRecord rec;
  rec.L = L;
  rec.coeffs.reserve(static_cast<size_t>(L) + 1);
  for (int k = 0; k <= L; ++k) {
    if (!std::getline(in, line))
      throw CacheChecksumMismatch("cache_load: truncated file " + path.string());
    payload += line + "\n";
    try {
      rec.coeffs.emplace_back(line);
    } catch (const std::exception&) {
      throw CacheChecksumMismatch("cache_load: malformed integer in " + path.string());
    }
  }
  if (!std::getline(in, line) || line.rfind("sha256=", 0) != 0)
    throw CacheChecksumMismatch("cache_load: missing digest line in " + path.string());
  if (line.substr(7) != detail::sha256_hex(payload))
    throw CacheChecksumMismatch("cache_load: digest mismatch in " + path.string());
  try {
    validate(rec);
  } catch (const InvariantViolation& e) {
    throw CacheInvariantViolation(std::string("cache_load: ") + e.what());
  }
  return rec;
}

inline bool cache_has_valid(const std::filesystem::path& dir, int L) {
  try {
    cache_load(dir, L);
    return true;
  } catch (const CacheError&) {
    return false;
  }
}

// Load from cache or compute-and-store.
inline CharPolyRecord cache_get_or_compute(const std::filesystem::path& dir, int L) {
  try {
    return cache_load(dir, L);
  } catch (const CacheMissing&) {
    CharPolyRecord rec = char_poly(L);
    cache_store(dir, rec);
    return rec;
  }
}

}  // namespace pdet
