#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lk {

struct Check {
    std::string name;
    bool pass = true;
    std::size_t failures = 0;
    std::size_t instances = 0;
    std::vector<std::string> witnesses;
    std::string note;
};

// Outcome of a verification pass. Every failing instance is counted; at most
// witness_cap witnesses are kept per check.
class Report {
public:
    explicit Report(std::size_t witness_cap = 10) : cap_(witness_cap) {}

    Check& check(const std::string& name);
    // Records one instance of the named check.
    void record(const std::string& name, bool ok, const std::string& witness = {});
    void fail(const std::string& name, const std::string& witness);
    void note(const std::string& name, const std::string& text);
    void merge(const Report& other, const std::string& prefix = {});

    bool pass() const;
    const std::vector<Check>& checks() const { return checks_; }
    const Check* find(const std::string& name) const;
    std::size_t witness_cap() const { return cap_; }

    std::string summary() const;

private:
    std::size_t cap_;
    std::vector<Check> checks_;
};

}  // namespace lk
