#include "ulrich/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "ulrich/errors.hpp"

namespace ulrich {

namespace {

Int parse_int(const std::string& s)
{
    static const std::regex re(R"(\s*([+-]?\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw InvalidInput("expected an integer, got '" + s + "'");
    try {
        return std::stoll(m[1].str());
    } catch (const std::out_of_range&) {
        throw InvalidInput("integer out of range: '" + s + "'");
    }
}

} // namespace

std::vector<Int> parse_int_list(const std::string& text)
{
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_int(item));
    if (out.empty() || (!text.empty() && text.back() == ','))
        throw InvalidInput("bad integer list '" + text + "'");
    return out;
}

Divisor parse_divisor(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (ch != ' ')
            s += ch;
    if (s.empty())
        throw InvalidInput("empty divisor");
    if (s == "0")
        return {0, 0};
    static const std::regex term(R"(([+-]?)(\d*)([HFhf]))");
    Divisor d;
    bool seen_h = false, seen_f = false;
    auto it = std::sregex_iterator(s.begin(), s.end(), term);
    std::size_t pos = 0;
    for (; it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        if (static_cast<std::size_t>(m.position()) != pos || (pos > 0 && m[1].str().empty()))
            throw InvalidInput("bad divisor '" + text + "'");
        pos += m.length();
        Int coef = m[2].str().empty() ? 1 : std::stoll(m[2].str());
        if (m[1].str() == "-")
            coef = -coef;
        char letter = static_cast<char>(std::toupper(m[3].str()[0]));
        bool& seen = letter == 'H' ? seen_h : seen_f;
        if (seen)
            throw InvalidInput("repeated term in divisor '" + text + "'");
        seen = true;
        (letter == 'H' ? d.h : d.f) = coef;
    }
    if (pos != s.size())
        throw InvalidInput("bad divisor '" + text + "'");
    return d;
}

Divisor parse_pair(const std::string& text)
{
    auto v = parse_int_list(text);
    if (v.size() != 2)
        throw InvalidInput("pair needs two integers, got '" + text + "'");
    return from_pair(v[0], v[1]);
}

Profile parse_profile(const nlohmann::json& j)
{
    try {
        Profile p;
        p.n = j.at("n").get<int>();
        for (const auto& e : j.at("entries"))
            p.entries.push_back({e.at("j").get<int>(), e.at("q").get<int>(), e.at("h").get<Int>()});
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad profile: ") + e.what());
    }
}

Profile load_profile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open profile '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad profile JSON: ") + e.what());
    }
    return parse_profile(j);
}

nlohmann::json to_json(const Divisor& d) { return {{"h", d.h}, {"f", d.f}}; }

nlohmann::json to_json(const Interval& iv)
{
    if (iv.is_exact())
        return iv.lo;
    return to_string(iv);
}

nlohmann::json to_json(const CohomTable& t)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& iv : t.h)
        a.push_back(to_json(iv));
    return a;
}

std::string slope_string(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

nlohmann::json to_json(const TypeInfo& info)
{
    return {{"type", info.type.a},
            {"rank", info.rank},
            {"c1", to_json(info.c1)},
            {"h0", info.h0},
            {"slope", slope_string(info.slope)}};
}

nlohmann::json to_json(const BeilinsonTable& t)
{
    return {{"entries", t.entries}, {"f_labels", t.f_labels}, {"e_labels", t.e_labels}};
}

std::string render_table(const BeilinsonTable& t, TableFormat fmt)
{
    const int size = t.size();
    std::ostringstream out;
    auto row = [&](const std::string& head, auto cell) {
        if (fmt == TableFormat::Markdown) {
            out << "| " << head;
            for (int j = size - 1; j >= 0; --j)
                out << " | " << cell(j);
            out << " |\n";
        } else {
            out << head;
            for (int j = size - 1; j >= 0; --j)
                out << " & " << cell(j);
            out << " \\\\\n";
        }
    };
    auto label = [&](const std::string& s) {
        return fmt == TableFormat::Latex ? "$" + s + "$" : s;
    };
    if (fmt == TableFormat::Latex) {
        out << "\\begin{tabular}{c|" << std::string(static_cast<std::size_t>(size), 'c') << "}\n";
    }
    row("F", [&](int j) { return label(t.f_labels[j]); });
    if (fmt == TableFormat::Markdown) {
        out << "|---";
        for (int j = 0; j < size; ++j)
            out << "|---";
        out << "|\n";
    } else {
        out << "\\hline\n";
    }
    for (int q = size - 1; q >= 0; --q)
        row(std::to_string(q), [&](int j) { return std::to_string(t.at(j, q)); });
    if (fmt == TableFormat::Latex)
        out << "\\hline\n";
    row("E", [&](int j) { return label(t.e_labels[j]); });
    if (fmt == TableFormat::Latex)
        out << "\\end{tabular}\n";
    return out.str();
}

} // namespace ulrich
