#pragma once

#include <set>
#include <string>
#include <vector>

namespace holoproj {

// One verification entry. A check whose derived value differs from its
// reference is a "discrepancy" when the id is in the configured typo-suspect
// list, otherwise a failure.
struct CheckReport {
  std::string id;
  std::string status;      // pass | fail | discrepancy
  std::string statement;   // the formula or property being checked
  std::string expected;    // canonical text of the reference value
  std::string derived;     // canonical text of the derived value
  std::string difference;  // canonical text, empty when equal
};

class Suspects {
 public:
  static const Suspects& builtin();
  static Suspects from_json_text(const std::string& text);
  bool contains(const std::string& id) const { return ids_.count(id) > 0; }
  const std::set<std::string>& ids() const { return ids_; }

 private:
  std::set<std::string> ids_;
};

class Report {
 public:
  explicit Report(const Suspects& suspects = Suspects::builtin()) : suspects_(&suspects) {}

  void add_pass_fail(const std::string& id, const std::string& statement, bool ok,
                     const std::string& expected = "", const std::string& derived = "");
  // compares canonical texts; routes unequal results through the suspect list
  void add_compare(const std::string& id, const std::string& statement,
                   const std::string& expected, const std::string& derived,
                   const std::string& difference = "");
  void append(const Report& other);

  const std::vector<CheckReport>& checks() const { return checks_; }
  unsigned passed() const;
  unsigned failed() const;
  unsigned discrepancies() const;
  // 0 when every check passes (discrepancies allowed only on suspects), else 1
  int exit_code() const;

  std::string to_json() const;   // deterministic field and entry order
  std::string to_text() const;

 private:
  const Suspects* suspects_;
  std::vector<CheckReport> checks_;
};

}  // namespace holoproj
