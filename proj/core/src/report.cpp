#include "linfkit/report.hpp"

#include <sstream>
#include <utility>

namespace lk {

Check& Report::check(const std::string& name)
{
    for (auto& c : checks_)
        if (c.name == name)
            return c;
    Check c;
    c.name = name;
    checks_.push_back(std::move(c));
    return checks_.back();
}

void Report::record(const std::string& name, bool ok, const std::string& witness)
{
    Check& c = check(name);
    ++c.instances;
    if (ok)
        return;
    c.pass = false;
    ++c.failures;
    if (c.witnesses.size() < cap_)
        c.witnesses.push_back(witness);
}

void Report::fail(const std::string& name, const std::string& witness)
{
    record(name, false, witness);
}

void Report::note(const std::string& name, const std::string& text)
{
    check(name).note = text;
}

void Report::merge(const Report& other, const std::string& prefix)
{
    for (const auto& o : other.checks_) {
        Check& c = check(prefix + o.name);
        c.pass = c.pass && o.pass;
        c.failures += o.failures;
        c.instances += o.instances;
        for (const auto& w : o.witnesses)
            if (c.witnesses.size() < cap_)
                c.witnesses.push_back(w);
        if (!o.note.empty())
            c.note = o.note;
    }
}

bool Report::pass() const
{
    for (const auto& c : checks_)
        if (!c.pass)
            return false;
    return true;
}

const Check* Report::find(const std::string& name) const
{
    for (const auto& c : checks_)
        if (c.name == name)
            return &c;
    return nullptr;
}

std::string Report::summary() const
{
    std::ostringstream out;
    for (const auto& c : checks_) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.instances << " checked";
        if (c.failures)
            out << ", " << c.failures << " failed";
        out << ")";
        if (!c.note.empty())
            out << " " << c.note;
        out << "\n";
        for (const auto& w : c.witnesses)
            out << "    " << w << "\n";
    }
    return out.str();
}

}  // namespace lk
