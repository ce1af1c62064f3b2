#include "holoproj/report.hpp"

#include <json.hpp>
#include <sstream>

namespace holoproj {

using nlohmann::json;

const Suspects& Suspects::builtin() {
  static Suspects s = [] {
    Suspects t;
    t.ids_ = {
        "casimir.d4_cyclic_display",
        "lemma51.B_action",
        "sec6.c1.shift_0_0",
        "sec6.c2.shift_0_0",
        "sec6.c2.shift_2_4",
        "sec6.dplus.shift_2_0",
        "sec6.dplus.shift_2_2",
        "sec6.dminus.shift_0_4",
        "thm63.s1_0.zero_shift",
        "thm63.s1_1.zero_shift",
        "thm63.dminus_line.shift_0_4",
        "thm63.dminus_line.shift_2_4",
        "thm63.elimination.derived_chain",
    };
    return t;
  }();
  return s;
}

Suspects Suspects::from_json_text(const std::string& text) {
  Suspects s;
  json j = json::parse(text);
  for (auto& id : j.at("suspects")) s.ids_.insert(id.get<std::string>());
  return s;
}

void Report::add_pass_fail(const std::string& id, const std::string& statement, bool ok,
                           const std::string& expected, const std::string& derived) {
  checks_.push_back({id, ok ? "pass" : "fail", statement, expected, derived,
                     ok ? "" : "property violated"});
}

void Report::add_compare(const std::string& id, const std::string& statement,
                         const std::string& expected, const std::string& derived,
                         const std::string& difference) {
  CheckReport c{id, "pass", statement, expected, derived, ""};
  if (expected != derived) {
    c.difference = difference.empty() ? (derived + "  vs  " + expected) : difference;
    c.status = suspects_->contains(id) ? "discrepancy" : "fail";
  }
  checks_.push_back(std::move(c));
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

unsigned Report::passed() const {
  unsigned n = 0;
  for (auto& c : checks_) n += c.status == "pass";
  return n;
}
unsigned Report::failed() const {
  unsigned n = 0;
  for (auto& c : checks_) n += c.status == "fail";
  return n;
}
unsigned Report::discrepancies() const {
  unsigned n = 0;
  for (auto& c : checks_) n += c.status == "discrepancy";
  return n;
}

int Report::exit_code() const { return failed() ? 1 : 0; }

std::string Report::to_json() const {
  json out;
  out["checks"] = json::array();
  for (auto& c : checks_) {
    json e;
    e["id"] = c.id;
    e["status"] = c.status;
    e["statement"] = c.statement;
    if (!c.expected.empty()) e["expected"] = c.expected;
    if (!c.derived.empty()) e["derived"] = c.derived;
    if (!c.difference.empty()) e["difference"] = c.difference;
    out["checks"].push_back(e);
  }
  out["summary"] = {{"pass", passed()}, {"fail", failed()}, {"discrepancy", discrepancies()}};
  return out.dump(1);
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (auto& c : checks_) {
    os << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "DISC") << "  " << c.id
       << "  " << c.statement << "\n";
    if (c.status != "pass") {
      if (!c.expected.empty()) os << "      reference: " << c.expected << "\n";
      if (!c.derived.empty()) os << "      derived:   " << c.derived << "\n";
    }
  }
  os << "summary: " << passed() << " pass, " << failed() << " fail, " << discrepancies()
     << " discrepancy\n";
  return os.str();
}

}  // namespace holoproj
