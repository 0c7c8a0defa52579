#include "gauge2d/sysfile.hpp"

#include "gauge2d/errors.hpp"
#include "gauge2d/expr.hpp"
#include "gauge2d/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace gauge2d {

namespace {

struct Entry {
    std::string key, value;
    int line = 0;
};

struct Sections {
    std::map<std::string, std::vector<Entry>> by_name;
    std::map<std::string, int> first_line;
    bool has(const std::string& s) const { return by_name.count(s) != 0; }
};

std::string trim(const std::string& s)
{
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Sections split_sections(const std::string& text)
{
    static const std::set<std::string> known = {"fields",      "lambdas", "params",
                                                "evolution",   "constraints", "theta",
                                                "options"};
    Sections out;
    std::istringstream in(text);
    std::string raw;
    std::string current;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        s = trim(s);
        if (s.empty())
            continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ParseError("unterminated section header", line, 1);
            std::string name = trim(s.substr(1, s.size() - 2));
            if (!known.count(name))
                throw ParseError("unknown section [" + name + "]", line, 1);
            if (out.has(name))
                throw ParseError("duplicate section [" + name + "]", line, 1);
            out.by_name[name];
            out.first_line[name] = line;
            current = name;
            continue;
        }
        if (current.empty())
            throw ParseError("content before the first section header", line, 1);
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", line, 1);
        Entry e;
        e.key = trim(s.substr(0, eq));
        e.value = trim(s.substr(eq + 1));
        e.line = line;
        if (e.key.empty())
            throw ParseError("empty key", line, 1);
        out.by_name[current].push_back(std::move(e));
    }
    return out;
}

// "[a, b, c]" -> {"a", "b", "c"}; "[]" -> {}.
std::vector<std::string> bracket_list(const Entry& e)
{
    if (e.value.size() < 2 || e.value.front() != '[' || e.value.back() != ']')
        throw ParseError("expected a [..] list for '" + e.key + "'", e.line, 1);
    std::string body = trim(e.value.substr(1, e.value.size() - 2));
    std::vector<std::string> out;
    if (body.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = body.find(',', start);
        std::string item = trim(body.substr(start, comma - start));
        if (item.empty())
            throw ParseError("empty list entry for '" + e.key + "'", e.line, 1);
        out.push_back(std::move(item));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

const std::set<std::string> reserved = {"d", "dbar", "D", "Dbar"};

std::vector<std::string> name_list(const Sections& sec, const std::string& section,
                                   const std::string& key)
{
    auto it = sec.by_name.find(section);
    if (it == sec.by_name.end())
        return {};
    std::vector<std::string> out;
    bool seen = false;
    for (const Entry& e : it->second) {
        if (e.key != key)
            continue;
        if (seen)
            throw ParseError("duplicate key '" + key + "'", e.line, 1);
        seen = true;
        out = bracket_list(e);
        for (const std::string& n : out)
            if (reserved.count(n))
                throw ParseError("'" + n + "' is reserved", e.line, 1);
    }
    return out;
}

void reject_unknown_keys(const Sections& sec, const std::string& section,
                         const std::set<std::string>& keys)
{
    auto it = sec.by_name.find(section);
    if (it == sec.by_name.end())
        return;
    for (const Entry& e : it->second)
        if (!keys.count(e.key))
            throw ParseError("unknown key '" + e.key + "' in [" + section + "]", e.line, 1);
}

// One `name = value` entry per expected name, any order, nothing extra.
std::map<std::string, Entry> keyed_entries(const Sections& sec, const std::string& section,
                                           const std::vector<std::string>& expected)
{
    std::map<std::string, Entry> out;
    auto it = sec.by_name.find(section);
    if (it == sec.by_name.end()) {
        if (!expected.empty())
            throw ParseError("missing section [" + section + "]", 1, 1);
        return out;
    }
    for (const Entry& e : it->second) {
        if (std::find(expected.begin(), expected.end(), e.key) == expected.end())
            throw ParseError("'" + e.key + "' has no place in [" + section + "]", e.line, 1);
        if (out.count(e.key))
            throw ParseError("duplicate entry for '" + e.key + "'", e.line, 1);
        out.emplace(e.key, e);
    }
    for (const std::string& name : expected)
        if (!out.count(name))
            throw ParseError("missing entry for '" + name + "' in [" + section + "]",
                             sec.first_line.at(section), 1);
    return out;
}

int int_option(const Entry& e)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(e.value, &used);
        if (used != e.value.size() || v < 0)
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("'" + e.key + "' needs a nonnegative integer", e.line, 1);
    }
}

FileOptions parse_options(const Sections& sec)
{
    FileOptions opts;
    reject_unknown_keys(sec, "options", {"max_k", "order_bound", "format"});
    auto it = sec.by_name.find("options");
    if (it == sec.by_name.end())
        return opts;
    std::set<std::string> seen;
    for (const Entry& e : it->second) {
        if (!seen.insert(e.key).second)
            throw ParseError("duplicate key '" + e.key + "'", e.line, 1);
        if (e.key == "max_k")
            opts.max_k = int_option(e);
        else if (e.key == "order_bound")
            opts.order_bound = int_option(e);
        else {
            if (e.value != "text" && e.value != "machine")
                throw ParseError("format must be text or machine", e.line, 1);
            opts.format = e.value;
        }
    }
    return opts;
}

SystemFile parse_theta_file(const Sections& sec, std::vector<std::string> names,
                            const std::vector<std::string>& constrained_names,
                            std::vector<std::string> params, FileOptions opts)
{
    for (const char* banned : {"lambdas", "evolution", "constraints"})
        if (sec.has(banned))
            throw ParseError(std::string("[") + banned + "] has no place in a reduction file",
                             sec.first_line.at(banned), 1);

    NameTable table;
    PfaffianInput input;
    std::set<std::string> cset(constrained_names.begin(), constrained_names.end());
    for (const std::string& n : names) {
        bool c = cset.count(n) != 0;
        table.fields.push_back(n);
        table.constrained.push_back(c);
        (c ? input.constrained : input.unconstrained).push_back(n);
    }
    table.params = params;
    input.params = std::move(params);

    auto rows = keyed_entries(sec, "theta", input.constrained);
    for (const std::string& name : input.constrained) {
        const Entry& e = rows.at(name);
        std::vector<std::string> exprs = bracket_list(e);
        if (static_cast<int>(exprs.size()) != input.na())
            throw ParseError("row for '" + name + "' needs " + std::to_string(input.na())
                                 + " entries",
                             e.line, 1);
        std::vector<FieldElem> row;
        for (const std::string& text : exprs)
            row.push_back(eval_field(parse_expr(text, e.line), table));
        input.z.push_back(std::move(row));
    }

    SystemFile out;
    out.theta = std::move(input);
    out.options = std::move(opts);
    return out;
}

} // namespace

SystemFile parse_system_file(const std::string& text)
{
    Sections sec = split_sections(text);
    reject_unknown_keys(sec, "fields", {"names", "constrained"});
    reject_unknown_keys(sec, "lambdas", {"names"});
    reject_unknown_keys(sec, "params", {"names"});

    std::vector<std::string> names = name_list(sec, "fields", "names");
    if (names.empty())
        throw ParseError("a system needs at least one field", 1, 1);
    std::vector<std::string> constrained_names = name_list(sec, "fields", "constrained");
    for (const std::string& c : constrained_names)
        if (std::find(names.begin(), names.end(), c) == names.end())
            throw ParseError("constrained name '" + c + "' is not a field",
                             sec.first_line.at("fields"), 1);
    std::vector<std::string> lambdas = name_list(sec, "lambdas", "names");
    std::vector<std::string> params = name_list(sec, "params", "names");
    FileOptions opts = parse_options(sec);

    if (sec.has("theta"))
        return parse_theta_file(sec, names, constrained_names, std::move(params),
                                std::move(opts));

    NameTable table;
    std::vector<CartanSystem::Field> fields;
    std::vector<std::string> constrained_order;
    std::set<std::string> cset(constrained_names.begin(), constrained_names.end());
    for (const std::string& n : names) {
        bool c = cset.count(n) != 0;
        fields.push_back({n, c});
        table.fields.push_back(n);
        table.constrained.push_back(c);
        if (c)
            constrained_order.push_back(n);
    }
    table.lambdas = lambdas;
    table.params = params;

    std::vector<FieldElem> z_evolution;
    auto evo = keyed_entries(sec, "evolution", names);
    if (evo.empty())
        throw ParseError("missing section [evolution]", 1, 1);
    for (const std::string& name : names) {
        const Entry& e = evo.at(name);
        z_evolution.push_back(eval_field(parse_expr(e.value, e.line), table));
    }
    std::vector<FieldElem> z_constraint;
    auto con = keyed_entries(sec, "constraints", constrained_order);
    for (const std::string& name : constrained_order)
        z_constraint.push_back(eval_field(parse_expr(con.at(name).value, con.at(name).line), table));

    SystemFile out;
    out.system = CartanSystem::create(std::move(fields), std::move(lambdas), std::move(params),
                                      std::move(z_evolution), std::move(z_constraint));
    out.options = std::move(opts);

    ValidationReport report = validate(*out.system, out.options.order_bound);
    if (!report.ok())
        throw ValidationError(describe(report, *out.system));
    return out;
}

} // namespace gauge2d
