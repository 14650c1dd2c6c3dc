#include "linkage/cache.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace linkage {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json e = nlohmann::json::array();
    for (int i = 0; i < kMaxVars; ++i) e.push_back(static_cast<int>(t.mon.exp[i]));
    arr.push_back({e, t.coef.get_str()});
  }
  return arr;
}

Poly poly_from_json(const Field& f, const nlohmann::json& j) {
  std::vector<PolyTerm> terms;
  for (const auto& t : j) {
    std::vector<int> e = t.at(0).get<std::vector<int>>();
    Scalar c(t.at(1).get<std::string>());
    c.canonicalize();
    terms.push_back({Monomial::from_exponents(e), f.from_rational(c)});
  }
  return Poly::from_terms(f, std::move(terms));
}

nlohmann::json resolution_to_json(const Resolution& r) {
  nlohmann::json j;
  j["twists"] = r.twists;
  j["finite"] = r.finite;
  nlohmann::json maps = nlohmann::json::array();
  for (const auto& m : r.maps) {
    nlohmann::json mj;
    mj["rows"] = m.rows();
    mj["cols"] = m.cols();
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b)
        if (!m.at(a, b).is_zero()) entries.push_back({a, b, poly_to_json(m.at(a, b))});
    mj["entries"] = entries;
    maps.push_back(mj);
  }
  j["maps"] = maps;
  return j;
}

Resolution resolution_from_json(const GradedRing& ring, const nlohmann::json& j) {
  Resolution r;
  r.ring = ring;
  r.twists = j.at("twists").get<std::vector<std::vector<int>>>();
  r.finite = j.at("finite").get<bool>();
  for (const auto& mj : j.at("maps")) {
    Matrix m(mj.at("rows").get<std::size_t>(), mj.at("cols").get<std::size_t>());
    for (const auto& e : mj.at("entries")) {
      std::size_t a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
      if (a >= m.rows() || b >= m.cols()) throw std::runtime_error("entry out of range");
      m.at(a, b) = poly_from_json(ring.field(), e.at(2));
    }
    r.maps.push_back(std::move(m));
  }
  if (r.twists.size() != r.maps.size() + 1) throw std::runtime_error("inconsistent resolution entry");
  for (std::size_t i = 0; i < r.maps.size(); ++i)
    if (r.maps[i].rows() != r.twists[i].size() || r.maps[i].cols() != r.twists[i + 1].size())
      throw std::runtime_error("inconsistent resolution entry");
  return r;
}

std::optional<Resolution> ResolutionCache::get(const GradedRing& ring, const std::string& material) {
  std::lock_guard<std::mutex> lock(mu_);
  if (!enabled_) return std::nullopt;
  const std::string key = sha256_hex(material);
  auto it = memory_.find(key);
  if (it != memory_.end() && it->second.material == material) {
    ++stats_.hits;
    return it->second.resolution;
  }
  if (!dir_.empty()) {
    fs::path p = fs::path(dir_) / (key + ".json");
    std::ifstream in(p);
    if (in) {
      try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("material").get<std::string>() == material) {
          Resolution r = resolution_from_json(ring, j.at("resolution"));
          memory_[key] = Entry{material, r};
          ++stats_.disk_hits;
          return r;
        }
      } catch (const std::exception& e) {
        ++stats_.corrupt;
        std::cerr << "warning: ignoring corrupt cache entry " << p.string() << ": " << e.what() << "\n";
      }
    }
  }
  ++stats_.misses;
  return std::nullopt;
}

void ResolutionCache::put(const std::string& material, const Resolution& r) {
  std::lock_guard<std::mutex> lock(mu_);
  if (!enabled_) return;
  const std::string key = sha256_hex(material);
  auto it = memory_.find(key);
  if (it != memory_.end() && it->second.material == material &&
      (it->second.resolution.finite || it->second.resolution.length() >= r.length()))
    return;
  memory_[key] = Entry{material, r};
  if (dir_.empty()) return;
  fs::path p = fs::path(dir_) / (key + ".json");
  // keep an existing persistent entry unless this one is strictly longer
  {
    std::ifstream in(p);
    if (in) {
      try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("material").get<std::string>() == material) {
          const auto& res = j.at("resolution");
          if (res.at("finite").get<bool>() || res.at("maps").size() >= r.length()) return;
        }
      } catch (const std::exception&) {
      }
    }
  }
  nlohmann::json j;
  j["material"] = material;
  j["resolution"] = resolution_to_json(r);
  std::error_code ec;
  fs::create_directories(dir_, ec);
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  fs::rename(tmp, p, ec);
  if (!ec) ++stats_.writes;
}

void ResolutionCache::set_directory(const std::string& dir) {
  std::lock_guard<std::mutex> lock(mu_);
  dir_ = dir;
}

std::string ResolutionCache::directory() const {
  std::lock_guard<std::mutex> lock(mu_);
  return dir_;
}

void ResolutionCache::set_enabled(bool on) {
  std::lock_guard<std::mutex> lock(mu_);
  enabled_ = on;
}

bool ResolutionCache::enabled() const {
  std::lock_guard<std::mutex> lock(mu_);
  return enabled_;
}

void ResolutionCache::clear_memory() {
  std::lock_guard<std::mutex> lock(mu_);
  memory_.clear();
}

ResolutionCache::Stats ResolutionCache::stats() const {
  std::lock_guard<std::mutex> lock(mu_);
  return stats_;
}

void ResolutionCache::reset_stats() {
  std::lock_guard<std::mutex> lock(mu_);
  stats_ = Stats{};
}

ResolutionCache& resolution_cache() {
  static ResolutionCache cache;
  return cache;
}

}  // namespace linkage
