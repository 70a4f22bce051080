#include "linfkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace lk {

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error(std::string(kind_name(kind)) + " error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      kind_(kind), line_(line), column_(column), message_(message)
{
}

const char* kind_name(ParseError::Kind k)
{
    switch (k) {
    case ParseError::Kind::Syntax: return "syntax";
    case ParseError::Kind::UnknownLabel: return "unknown-label";
    case ParseError::Kind::DegreeRule: return "degree-rule";
    default: return "semantic";
    }
}

namespace {

using Kind = ParseError::Kind;

struct Token {
    std::string text;
    int column;  // 1-based
};

struct Line {
    int number;
    std::string raw;  // comment stripped
    std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> out;
    int n = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string raw(text.substr(pos, end - pos));
        ++n;
        if (auto h = raw.find('#'); h != std::string::npos)
            raw.resize(h);
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        Line l{n, raw, {}};
        for (std::size_t i = 0; i < raw.size();) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])))
                ++j;
            l.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
            i = j;
        }
        if (!l.tokens.empty())
            out.push_back(std::move(l));
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return out;
}

bool valid_label(const std::string& s)
{
    if (s.empty() || s == "->" || is_scalar_token(s))
        return false;
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == '[' || c == ']' || c == ':' || c == '=')
            return false;
    return true;
}

std::optional<int> parse_int(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
    if (i == s.size())
        return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            return std::nullopt;
    try {
        return std::stoi(s);
    } catch (const std::out_of_range&) {
        return std::nullopt;
    }
}

[[noreturn]] void fail(Kind k, const Line& l, int col, const std::string& msg)
{
    throw ParseError(k, l.number, col, msg);
}

}  // namespace

StructureFile parse_structure_file(std::string_view text)
{
    StructureFile f;
    enum class Section { None, Meta, Space, Map } section = Section::None;
    int arity = 0;
    std::set<std::string> seen_sections;
    std::vector<BasisElement> elements;
    std::set<int> degrees;
    std::optional<GradedSpace> space;
    std::map<Tuple, int> entry_line;

    for (const auto& l : split_lines(text)) {
        const auto& t = l.tokens;
        if (t[0].text.front() == '[') {
            std::string head;
            for (const auto& tok : t)
                head += (head.empty() ? "" : " ") + tok.text;
            if (head == "[meta]") {
                section = Section::Meta;
            } else if (head == "[space]") {
                if (space)
                    fail(Kind::Semantic, l, t[0].column, "[space] must come before the maps");
                section = Section::Space;
            } else if (t.size() == 2 && t[0].text == "[map" && t[1].text.back() == ']') {
                auto k = parse_int(t[1].text.substr(0, t[1].text.size() - 1));
                if (!k || *k < 1)
                    fail(Kind::Syntax, l, t[1].column, "map arity must be a positive integer");
                if (!space) {
                    if (elements.empty())
                        fail(Kind::Semantic, l, t[0].column, "[map] before [space]");
                    space = GradedSpace::from_elements(elements);
                    f.structure = LInfty(*space);
                }
                section = Section::Map;
                arity = *k;
            } else {
                fail(Kind::Syntax, l, t[0].column, "unknown section header '" + head + "'");
            }
            if (!seen_sections.insert(head).second)
                fail(Kind::Semantic, l, t[0].column, "repeated section " + head);
            continue;
        }
        switch (section) {
        case Section::None:
            fail(Kind::Syntax, l, t[0].column, "content outside a section");
        case Section::Meta: {
            auto eq = l.raw.find('=');
            if (eq == std::string::npos)
                fail(Kind::Syntax, l, t[0].column, "expected 'key = value'");
            auto trim = [](std::string s) {
                auto b = s.find_first_not_of(" \t");
                auto e = s.find_last_not_of(" \t");
                return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
            };
            std::string key = trim(l.raw.substr(0, eq)), value = trim(l.raw.substr(eq + 1));
            if (key.empty() || key.find_first_of(" \t") != std::string::npos)
                fail(Kind::Syntax, l, t[0].column, "bad meta key");
            if (!f.meta.emplace(key, value).second)
                fail(Kind::Semantic, l, t[0].column, "repeated meta key '" + key + "'");
            break;
        }
        case Section::Space: {
            const std::string& d = t[0].text;
            auto deg = d.size() > 1 && d.back() == ':' ? parse_int(d.substr(0, d.size() - 1)) : std::nullopt;
            if (!deg)
                fail(Kind::Syntax, l, t[0].column, "expected '<degree>: labels'");
            if (t.size() == 1)
                fail(Kind::Syntax, l, t[0].column + static_cast<int>(d.size()), "empty component");
            if (!degrees.insert(*deg).second)
                fail(Kind::Semantic, l, t[0].column, "repeated degree " + std::to_string(*deg));
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (!valid_label(t[i].text))
                    fail(Kind::Syntax, l, t[i].column, "bad label '" + t[i].text + "'");
                for (const auto& e : elements)
                    if (e.label == t[i].text)
                        fail(Kind::Semantic, l, t[i].column, "repeated label '" + t[i].text + "'");
                elements.push_back({t[i].text, *deg});
            }
            break;
        }
        case Section::Map: {
            auto arrow = std::find_if(t.begin(), t.end(), [](const Token& x) { return x.text == "->"; });
            if (arrow == t.end())
                fail(Kind::Syntax, l, static_cast<int>(l.raw.size()) + 1, "expected '->'");
            std::size_t na = arrow - t.begin();
            if (static_cast<int>(na) != arity)
                fail(Kind::Semantic, l, t[0].column,
                     "l_" + std::to_string(arity) + " takes " + std::to_string(arity) + " inputs, got " +
                         std::to_string(na));
            Tuple args;
            int in_deg = 0;
            for (std::size_t i = 0; i < na; ++i) {
                auto id = space->find(t[i].text);
                if (!id)
                    fail(Kind::UnknownLabel, l, t[i].column, "unknown label '" + t[i].text + "'");
                args.push_back(*id);
                in_deg += space->degree(*id);
            }
            const int want = in_deg + 2 - arity;
            Vec out;
            std::optional<Scalar> coef;
            for (std::size_t i = na + 1; i < t.size(); ++i) {
                if (is_scalar_token(t[i].text)) {
                    if (coef)
                        fail(Kind::Syntax, l, t[i].column, "two coefficients in a row");
                    coef = parse_scalar(t[i].text);
                    continue;
                }
                auto id = space->find(t[i].text);
                if (!id)
                    fail(Kind::UnknownLabel, l, t[i].column, "unknown label '" + t[i].text + "'");
                if (space->degree(*id) != want)
                    fail(Kind::DegreeRule, l, t[i].column,
                         "deg(l_k)=2-k: l_" + std::to_string(arity) + " of inputs of total degree " +
                             std::to_string(in_deg) + " must land in degree " + std::to_string(want) + ", '" +
                             t[i].text + "' has degree " + std::to_string(space->degree(*id)));
                axpy(out, coef.value_or(Scalar(1)), basis_vec(*id));
                coef.reset();
            }
            if (coef)
                fail(Kind::Syntax, l, static_cast<int>(l.raw.size()) + 1, "coefficient without a label");
            auto [sign, key] = f.structure.canonicalize(args);
            if (sign == 0) {
                if (!is_zero(out))
                    fail(Kind::Semantic, l, t[0].column,
                         "antisymmetry: l_" + std::to_string(arity) + f.structure.tuple_string(args) +
                             " vanishes identically");
                break;
            }
            if (auto [it, fresh] = entry_line.emplace(key, l.number); !fresh)
                fail(Kind::Semantic, l, t[0].column,
                     "duplicate entry for " + f.structure.tuple_string(key) + " (first on line " +
                         std::to_string(it->second) + ")");
            f.structure.set(args, out);
            break;
        }
        }
    }
    if (!space) {
        if (elements.empty())
            throw ParseError(Kind::Semantic, 1, 1, "missing [space] section");
        f.structure = LInfty(GradedSpace::from_elements(elements));
    }
    return f;
}

std::string serialize_structure(const LInfty& L, const std::map<std::string, std::string>& meta)
{
    std::ostringstream out;
    if (!meta.empty()) {
        out << "[meta]\n";
        for (const auto& [k, v] : meta)
            out << k << " = " << v << "\n";
        out << "\n";
    }
    const GradedSpace& S = L.space();
    for (const auto& e : S.basis())
        if (!valid_label(e.label))
            throw std::invalid_argument("label '" + e.label + "' cannot be written");
    out << "[space]\n";
    auto degs = S.degrees();
    for (auto it = degs.rbegin(); it != degs.rend(); ++it) {
        out << *it << ":";
        for (int id : S.ids_of_degree(*it))
            out << " " << S.label(id);
        out << "\n";
    }
    for (const auto& [k, entries] : L.maps()) {
        if (entries.empty())
            continue;
        out << "\n[map " << k << "]\n";
        for (const auto& [args, v] : entries) {
            for (int a : args)
                out << S.label(a) << " ";
            out << "->";
            for (const auto& [id, c] : v) {
                if (c != 1)
                    out << " " << to_string(c);
                out << " " << S.label(id);
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string serialize_structure(const StructureFile& file)
{
    return serialize_structure(file.structure, file.meta);
}

namespace {

// "c*x1^2*x3 - x2 + 1/2" in x1..xN
std::map<std::vector<int>, Scalar> parse_poly(const Line& l, const std::string& s, int offset, int N)
{
    std::map<std::vector<int>, Scalar> r;
    std::size_t i = 0;
    auto col = [&](std::size_t at) { return offset + static_cast<int>(at); };
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    auto digits = [&] {
        std::size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        return s.substr(b, i - b);
    };
    skip();
    if (i == s.size())
        fail(Kind::Syntax, l, col(i), "empty polynomial");
    bool first = true;
    while (true) {
        skip();
        if (i == s.size())
            break;
        Scalar sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail(Kind::Syntax, l, col(i), "expected '+' or '-'");
        }
        first = false;
        Scalar c = sign;
        std::vector<int> e(N, 0);
        bool factor = true;
        while (factor) {
            skip();
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                std::string num = digits();
                if (i < s.size() && s[i] == '/') {
                    ++i;
                    std::string den = digits();
                    if (den.empty())
                        fail(Kind::Syntax, l, col(i), "bad rational");
                    num += "/" + den;
                }
                try {
                    c *= parse_scalar(num);
                } catch (const std::invalid_argument&) {
                    fail(Kind::Syntax, l, col(i), "bad rational '" + num + "'");
                }
            } else if (i < s.size() && s[i] == 'x') {
                std::size_t at = i++;
                std::string idx = digits();
                auto v = parse_int(idx);
                if (!v || *v < 1 || *v > N)
                    fail(Kind::UnknownLabel, l, col(at), "unknown coordinate 'x" + idx + "'");
                int p = 1;
                if (i < s.size() && s[i] == '^') {
                    std::size_t ep = ++i;
                    auto pw = parse_int(digits());
                    if (!pw || *pw < 1)
                        fail(Kind::Syntax, l, col(ep), "bad exponent");
                    p = *pw;
                }
                e[*v - 1] += p;
            } else {
                fail(Kind::Syntax, l, col(i), "expected a number or a coordinate");
            }
            skip();
            factor = i < s.size() && s[i] == '*';
            if (factor)
                ++i;
        }
        r[e] += c;
    }
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

std::string poly_string(const std::map<std::vector<int>, Scalar>& p)
{
    std::string out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const auto& [e, c0] = *it;
        Scalar c = c0;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                mono += (mono.empty() ? "" : "*") + std::string("x") + std::to_string(i + 1) +
                        (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
        if (mono.empty())
            out += to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += to_string(c) + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

BivectorFile parse_bivector_file(std::string_view text)
{
    std::optional<int> N;
    BivectorFile f;
    std::vector<Scalar> H;
    for (const auto& l : split_lines(text)) {
        const auto& t = l.tokens;
        if (t[0].text == "dim") {
            if (N)
                fail(Kind::Semantic, l, t[0].column, "repeated 'dim'");
            if (t.size() != 2 || !parse_int(t[1].text) || *parse_int(t[1].text) < 1)
                fail(Kind::Syntax, l, t[0].column, "expected 'dim N'");
            N = *parse_int(t[1].text);
            f.pi = PolyMultivector(*N);
            H.assign(*N * *N * *N, Scalar(0));
            continue;
        }
        if (!N)
            fail(Kind::Semantic, l, t[0].column, "'dim' must come first");
        const bool is_pi = t[0].text == "pi", is_h = t[0].text == "H";
        if (!is_pi && !is_h)
            fail(Kind::Syntax, l, t[0].column, "expected 'pi' or 'H'");
        const std::size_t nidx = is_pi ? 2 : 3;
        if (t.size() < nidx + 2 || t[nidx + 1].text != ":")
            fail(Kind::Syntax, l, t[0].column, std::string("expected '") + (is_pi ? "pi i j" : "H i j k") + " : value'");
        std::vector<int> idx;
        for (std::size_t i = 1; i <= nidx; ++i) {
            auto v = parse_int(t[i].text);
            if (!v || *v < 1 || *v > *N)
                fail(Kind::UnknownLabel, l, t[i].column, "index '" + t[i].text + "' out of range 1.." + std::to_string(*N));
            idx.push_back(*v - 1);
        }
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                if (idx[a] == idx[b])
                    fail(Kind::Semantic, l, t[b + 1].column, "antisymmetry: repeated index");
        const int off = t[nidx + 2].column;
        std::string rest = l.raw.substr(off - 1);
        auto p = parse_poly(l, rest, off, *N);
        if (is_pi) {
            for (const auto& [e, c] : p)
                f.pi.add(idx, e, c);
        } else {
            for (const auto& [e, c] : p)
                if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; }))
                    fail(Kind::Semantic, l, off, "H must be constant");
            Scalar c = p.empty() ? Scalar(0) : p.begin()->second;
            std::vector<int> order{0, 1, 2};
            // all six orderings with their parities
            do {
                int inv = 0;
                for (int a = 0; a < 3; ++a)
                    for (int b = a + 1; b < 3; ++b)
                        inv += order[a] > order[b];
                H[(idx[order[0]] * *N + idx[order[1]]) * *N + idx[order[2]]] += inv % 2 ? -c : c;
            } while (std::next_permutation(order.begin(), order.end()));
        }
    }
    if (!N)
        throw ParseError(Kind::Semantic, 1, 1, "missing 'dim'");
    f.H = ConstantThreeForm(*N, H);
    return f;
}

std::string serialize_bivector(const BivectorFile& file)
{
    const int N = file.pi.base_dim();
    std::ostringstream out;
    out << "dim " << N << "\n";
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            auto c = file.pi.coefficient({i, j});
            if (!c.empty())
                out << "pi " << i + 1 << " " << j + 1 << " : " << poly_string(c) << "\n";
        }
    if (file.H.base_dim() == N)
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                for (int k = j + 1; k < N; ++k)
                    if (file.H(i, j, k) != 0)
                        out << "H " << i + 1 << " " << j + 1 << " " << k + 1 << " : " << to_string(file.H(i, j, k))
                            << "\n";
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace lk
