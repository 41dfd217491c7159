#include "fibcat/report.hpp"

#include <cstdio>
#include <sstream>

namespace fibcat {

void Report::fail(std::string witness) {
  verdict = false;
  if (!witness.empty()) witnesses.push_back(std::move(witness));
}

void Report::count(std::string key, std::int64_t value) {
  for (auto& [k, v] : counts)
    if (k == key) {
      v = value;
      return;
    }
  counts.emplace_back(std::move(key), value);
}

void Report::add(Report child) {
  verdict = verdict && child.verdict;
  children.push_back(std::move(child));
}

void Report::attach(Report child) { children.push_back(std::move(child)); }

std::int64_t Report::count_of(const std::string& key) const {
  for (const auto& [k, v] : counts)
    if (k == key) return v;
  return -1;
}

const Report* Report::find(const std::string& name) const {
  if (check == name) return this;
  for (const auto& c : children)
    if (const Report* r = c.find(name)) return r;
  return nullptr;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["verdict"] = verdict ? "pass" : "fail";
  j["witnesses"] = witnesses;
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  for (const auto& [k, v] : counts) c[k] = v;
  j["counts"] = c;
  if (!children.empty()) {
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& child : children) j["children"].push_back(child.to_json());
  }
  return j;
}

namespace {

void render(const Report& r, int depth, std::ostringstream& out) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  out << pad << (r.verdict ? "[pass] " : "[FAIL] ") << r.check;
  if (!r.counts.empty()) {
    out << " {";
    for (std::size_t i = 0; i < r.counts.size(); ++i)
      out << (i ? ", " : "") << r.counts[i].first << ": " << r.counts[i].second;
    out << "}";
  }
  if (depth == 0 && r.elapsed_ms > 0.0) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.1f ms)", r.elapsed_ms);
    out << buf;
  }
  out << "\n";
  for (const auto& w : r.witnesses) out << pad << "    witness: " << w << "\n";
  for (const auto& c : r.children) render(c, depth + 1, out);
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream out;
  render(*this, 0, out);
  return out.str();
}

}  // namespace fibcat
