#include "skewplane/report.hpp"

#include <fstream>
#include <ostream>

namespace skewplane {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

bool Report::passed() const {
  for (const CaseResult& r : rows)
    if (r.status == "fail") return false;
  return true;
}

const CaseResult* Report::first_failure() const {
  for (const CaseResult& r : rows)
    if (r.status == "fail") return &r;
  return nullptr;
}

void Report::print(std::ostream& os) const {
  for (const CaseResult& r : rows) {
    os << r.status << "  " << r.suite << "/" << r.case_id;
    if (!r.witness.empty()) os << "  " << r.witness;
    os << '\n';
  }
}

void Report::write_csv(const std::filesystem::path& path) const {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    os << "suite,case_id,status,witness\n";
    for (const CaseResult& r : rows)
      os << csv_escape(r.suite) << ',' << csv_escape(r.case_id) << ','
         << csv_escape(r.status) << ',' << csv_escape(r.witness) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace skewplane
