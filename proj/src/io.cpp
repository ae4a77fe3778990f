#include <tclique/io.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tclique {

namespace {

    std::string located(const std::string & source, std::size_t line, std::size_t column, const std::string & message)
    {
        std::string where = source;
        if (line) {
            where += ":" + std::to_string(line);
            if (column)
                where += ":" + std::to_string(column);
        }
        return where + ": " + message;
    }

    Tournament from_matrix(const std::vector<std::string> & rows, const std::vector<std::size_t> & line_of, const std::string & source)
    {
        auto n = rows.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n)
                throw ParseError(source, line_of[i], 0, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                        " entries, expected " + std::to_string(n));
            for (std::size_t j = 0; j < n; ++j) {
                char c = rows[i][j];
                if (c != '0' && c != '1')
                    throw ParseError(source, line_of[i], j + 1, std::string("entry must be 0 or 1, got '") + c + "'");
                if (i == j && c != '0')
                    throw ParseError(source, line_of[i], j + 1, "diagonal entry must be 0");
            }
        }
        Digraph d(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                bool ij = rows[i][j] == '1', ji = rows[j][i] == '1';
                if (ij == ji)
                    throw ParseError(source, line_of[i], j + 1, "antisymmetry violated between " + std::to_string(i) + " and " +
                            std::to_string(j) + (ij ? ": both arcs present" : ": no arc"));
                ij ? d.add_arc(static_cast<Vertex>(i), static_cast<Vertex>(j)) : d.add_arc(static_cast<Vertex>(j), static_cast<Vertex>(i));
            }
        return Tournament(std::move(d));
    }

    Tournament parse_json_tournament(std::string_view text, const std::string & source)
    {
        Json j;
        try {
            j = Json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ParseError(source, 0, 0, std::string("invalid JSON: ") + e.what());
        }
        if (! j.is_object() || ! j.contains("rows") || ! j["rows"].is_array())
            throw ParseError(source, 0, 0, "expected an object with a \"rows\" array");
        std::vector<std::string> rows;
        for (auto & r : j["rows"]) {
            if (r.is_string()) {
                rows.push_back(r.get<std::string>());
                continue;
            }
            if (! r.is_array())
                throw ParseError(source, 0, 0, "row " + std::to_string(rows.size()) + " is neither a string nor an array");
            std::string row;
            for (auto & e : r) {
                if (! e.is_number_integer())
                    throw ParseError(source, 0, 0, "row " + std::to_string(rows.size()) + " holds a non-integer entry");
                auto v = e.get<long long>();
                row += v == 0 ? '0' : v == 1 ? '1' : '?';
            }
            rows.push_back(std::move(row));
        }
        if (j.contains("n") && (! j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != rows.size()))
            throw ParseError(source, 0, 0, "\"n\" does not match the number of rows");
        return from_matrix(rows, std::vector<std::size_t>(rows.size(), 0), source);
    }

    Json pair_json(const VertexPair & p)
    {
        return Json::array({p.first, p.second});
    }

    VertexPair pair_from(const Json & j)
    {
        return {j.at(0).get<Vertex>(), j.at(1).get<Vertex>()};
    }

    Span span_from(const Json & j)
    {
        return Span{j.at("first").get<Vertex>(), j.at("count").get<std::size_t>()};
    }

    Json certified_json(const MarkedGadget & g)
    {
        Json out = Json::array();
        for (auto & c : g.certified)
            out.push_back({{"name", c.name}, {"ordering", ordering_json(c.ordering)}, {"forward", c.forward}});
        return out;
    }

    std::vector<CertifiedOrdering> certified_from(const Json & j)
    {
        std::vector<CertifiedOrdering> out;
        for (auto & c : j)
            out.push_back(CertifiedOrdering{c.at("name").get<std::string>(), Ordering(c.at("ordering").get<std::vector<Vertex>>()),
                c.at("forward").get<std::vector<bool>>()});
        return out;
    }

    std::vector<Vertex> span_vertices(const Span & s)
    {
        std::vector<Vertex> out;
        for (auto v = s.first; v < s.end(); ++v)
            out.push_back(v);
        return out;
    }
} // namespace

ParseError::ParseError(std::string source, std::size_t line, std::size_t column, const std::string & message) :
    std::runtime_error(located(source, line, column, message)), line_(line), column_(column)
{
}

Tournament parse_tournament(std::string_view text, const std::string & source)
{
    auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string_view::npos && text[start] == '{')
        return parse_json_tournament(text, source);

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::vector<std::string> rows;
    std::vector<std::size_t> line_of;
    while (std::getline(in, line)) {
        ++line_no;
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        if (! n) {
            std::istringstream header(line);
            std::string word, extra;
            long long count = -1;
            if (! (header >> word >> count) || word != "tournament" || count < 0 || (header >> extra))
                throw ParseError(source, line_no, first + 1, "expected header 'tournament <n>'");
            n = static_cast<std::size_t>(count);
            continue;
        }
        auto last = line.find_last_not_of(" \t");
        if (rows.size() == *n)
            throw ParseError(source, line_no, first + 1, "more than " + std::to_string(*n) + " rows");
        rows.push_back(line.substr(first, last - first + 1));
        line_of.push_back(line_no);
        auto & row = rows.back();
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c] != '0' && row[c] != '1')
                throw ParseError(source, line_no, first + c + 1, std::string("entry must be 0 or 1, got '") + row[c] + "'");
        if (row.size() != *n)
            throw ParseError(source, line_no, first + 1, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(*n));
    }
    if (! n)
        throw ParseError(source, 0, 0, "missing 'tournament <n>' header");
    if (rows.size() != *n)
        throw ParseError(source, line_no, 0, "expected " + std::to_string(*n) + " rows, found " + std::to_string(rows.size()));
    return from_matrix(rows, line_of, source);
}

std::string format_trn(const Tournament & t)
{
    std::string out = "tournament " + std::to_string(t.size()) + "\n";
    for (Vertex i = 0; i < t.size(); ++i) {
        for (Vertex j = 0; j < t.size(); ++j)
            out += t.has_arc(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

Json tournament_json(const Tournament & t)
{
    Json rows = Json::array();
    for (auto & r : t.rows())
        rows.push_back(r);
    return {{"n", t.size()}, {"rows", rows}};
}

std::string read_file(const std::filesystem::path & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError(path.string(), 0, 0, "cannot read file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path & path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw std::runtime_error(path.string() + ": cannot write file");
    out << contents;
    if (! out)
        throw std::runtime_error(path.string() + ": write failed");
}

Tournament load_tournament(const std::filesystem::path & path)
{
    return parse_tournament(read_file(path), path.string());
}

void save_tournament(const Tournament & t, const std::filesystem::path & path)
{
    if (path.extension() == ".json")
        write_file(path, tournament_json(t).dump() + "\n");
    else
        write_file(path, format_trn(t));
}

std::string digest(std::string_view bytes)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Ordering parse_ordering(std::string_view text, const std::string & source)
{
    std::vector<Vertex> seq;
    auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string_view::npos && text[start] == '[') {
        try {
            seq = Json::parse(text).get<std::vector<Vertex>>();
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError(source, 0, 0, std::string("invalid ordering: ") + e.what());
        }
    }
    else {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < text.size();) {
            char c = text[i];
            if (c == '\n') {
                ++line;
                column = 1;
                ++i;
                continue;
            }
            if (c == ' ' || c == '\t' || c == ',' || c == '\r') {
                ++i;
                ++column;
                continue;
            }
            Vertex v = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
            if (ec != std::errc{})
                throw ParseError(source, line, column, "expected a vertex id");
            auto len = static_cast<std::size_t>(ptr - (text.data() + i));
            seq.push_back(v);
            i += len;
            column += len;
        }
    }
    try {
        return Ordering(std::move(seq));
    }
    catch (const std::invalid_argument & e) {
        throw ParseError(source, 0, 0, e.what());
    }
}

Json ordering_json(const Ordering & ordering, bool one_based)
{
    Json out = Json::array();
    for (auto v : ordering.sequence())
        out.push_back(v + (one_based ? 1 : 0));
    return out;
}

Json sizing_json(const SizingReport & s)
{
    return {{"construction", s.construction}, {"base_order", s.base_order.str()}, {"label_universe", s.label_universe.str()},
        {"copies_per_block", s.copies_per_block.str()}, {"copies", s.copies.str()}, {"total_vertices", s.total_vertices.str()},
        {"materializable", s.materializable}};
}

Json layout_json(const CopyLayout & layout)
{
    Json copies = Json::array();
    for (auto & c : layout.copies)
        copies.push_back({{"block", c.block_name}, {"block_index", c.block}, {"index_in_block", c.index_in_block},
            {"first", c.vertices.first}, {"count", c.vertices.count}, {"label_set", c.label_set}, {"labels", c.labels}});
    return {{"base_order", layout.base_order}, {"block_count", layout.block_count}, {"label_universe", layout.label_universe},
        {"copies", copies}};
}

Json landmarks_json(const ReductionInstance & inst)
{
    Json clauses = Json::array();
    for (auto & c : inst.formula.clauses) {
        Json lits = Json::array();
        for (auto & l : c)
            lits.push_back((l.positive ? 1 : -1) * static_cast<long long>(l.variable + 1));
        clauses.push_back(lits);
    }
    Json vars = Json::array();
    for (auto & vb : inst.var_blocks)
        vars.push_back({{"first", vb.span.first}, {"count", vb.span.count}, {"f_plus", pair_json(vb.f_plus)}, {"f_minus", pair_json(vb.f_minus)}});
    Json cls = Json::array();
    for (auto & cb : inst.clause_blocks)
        cls.push_back({{"first", cb.span.first}, {"count", cb.span.count},
            {"e", Json::array({pair_json(cb.e[0]), pair_json(cb.e[1]), pair_json(cb.e[2])})}});
    Json reversed = Json::array();
    for (auto & p : inst.reversed_arcs)
        reversed.push_back(pair_json(p));
    return {
        {"formula", {{"variables", inst.formula.variable_count}, {"clauses", clauses}}},
        {"gadget", {{"mode", inst.gadget.mode}, {"w_order", inst.gadget.w_order}, {"genuine", inst.gadget.genuine},
                       {"omega_verified", inst.gadget.omega_verified}}},
        {"vertices", inst.tournament.size()},
        {"var_blocks", vars},
        {"separator", {{"first", inst.separator.first}, {"count", inst.separator.count}}},
        {"clause_blocks", cls},
        {"reversed_arcs", reversed},
        {"var_certified", certified_json(inst.var_gadget)},
        {"clause_certified", certified_json(inst.clause_gadget)},
        {"w_ordering", ordering_json(inst.w_ordering)},
    };
}

ReductionInstance instance_from_json(const Tournament & t, const Json & j)
{
    ReductionInstance inst;
    try {
        if (j.at("vertices").get<std::size_t>() != t.size())
            throw ParseError("landmarks", 0, 0, "landmarks describe " + std::to_string(j.at("vertices").get<std::size_t>()) +
                    " vertices but the tournament has " + std::to_string(t.size()));
        inst.tournament = t;
        auto & f = j.at("formula");
        inst.formula.variable_count = f.at("variables").get<std::size_t>();
        for (auto & c : f.at("clauses")) {
            if (c.size() != 3)
                throw CnfError(CnfError::Kind::wrong_width, "landmark formula clause is not of width 3");
            Clause clause;
            for (std::size_t k = 0; k < 3; ++k) {
                auto lit = c.at(k).get<long long>();
                if (lit == 0)
                    throw CnfError(CnfError::Kind::bad_literal, "landmark formula has literal 0");
                clause[k] = Literal{static_cast<std::size_t>((lit < 0 ? -lit : lit) - 1), lit > 0};
            }
            inst.formula.clauses.push_back(clause);
        }
        validate(inst.formula);
        auto & g = j.at("gadget");
        inst.gadget = GadgetDescriptor{g.at("mode").get<std::string>(), g.at("w_order").get<std::size_t>(), g.at("genuine").get<bool>(),
            g.at("omega_verified").get<bool>()};
        for (auto & vb : j.at("var_blocks"))
            inst.var_blocks.push_back(VarBlock{span_from(vb), pair_from(vb.at("f_plus")), pair_from(vb.at("f_minus"))});
        inst.separator = span_from(j.at("separator"));
        for (auto & cb : j.at("clause_blocks")) {
            auto & e = cb.at("e");
            inst.clause_blocks.push_back(ClauseBlock{span_from(cb), {pair_from(e.at(0)), pair_from(e.at(1)), pair_from(e.at(2))}});
        }
        for (auto & p : j.at("reversed_arcs"))
            inst.reversed_arcs.push_back(pair_from(p));
        if (inst.var_blocks.size() != inst.formula.variable_count || inst.clause_blocks.size() != inst.formula.clauses.size())
            throw ParseError("landmarks", 0, 0, "block counts do not match the formula");

        auto local = [](const Span & s, const VertexPair & p, std::string name) {
            return MarkedArc{std::move(name), p.first - s.first, p.second - s.first};
        };
        inst.var_gadget.omega = inst.clause_gadget.omega = 3;
        inst.var_gadget.certified = certified_from(j.at("var_certified"));
        inst.clause_gadget.certified = certified_from(j.at("clause_certified"));
        if (! inst.var_blocks.empty()) {
            auto & vb = inst.var_blocks.front();
            inst.var_gadget.tournament = induced(t, span_vertices(vb.span));
            inst.var_gadget.marked_arcs = {local(vb.span, vb.f_plus, "uv"), local(vb.span, vb.f_minus, "wx")};
        }
        if (! inst.clause_blocks.empty()) {
            auto & cb = inst.clause_blocks.front();
            inst.clause_gadget.tournament = induced(t, span_vertices(cb.span));
            inst.clause_gadget.marked_arcs = {local(cb.span, cb.e[0], "uv"), local(cb.span, cb.e[1], "wx"), local(cb.span, cb.e[2], "yz")};
        }
        inst.w_ordering = Ordering(j.at("w_ordering").get<std::vector<Vertex>>());
    }
    catch (const nlohmann::json::exception & e) {
        throw ParseError("landmarks", 0, 0, e.what());
    }
    return inst;
}

Json pass_json(const PassInstance & inst)
{
    return {{"alphabet", inst.alphabet}, {"forbidden", inst.forbidden}};
}

PassInstance pass_from_json(const Json & j)
{
    PassInstance inst;
    try {
        inst.alphabet = j.at("alphabet").get<std::size_t>();
        inst.forbidden = j.at("forbidden").get<std::vector<Word>>();
    }
    catch (const nlohmann::json::exception & e) {
        throw ParseError("pass instance", 0, 0, e.what());
    }
    try {
        validate(inst);
    }
    catch (const std::invalid_argument & e) {
        throw ParseError("pass instance", 0, 0, e.what());
    }
    return inst;
}

Json envelope_json(const ReportEnvelope & e)
{
    Json inputs = Json::array();
    for (auto & [name, d] : e.inputs)
        inputs.push_back({{"name", name}, {"fnv1a64", d}});
    Json out = {{"command", e.command}, {"inputs", inputs}, {"result", e.result}, {"elapsed_ms", e.elapsed_ms}};
    out["nodes_explored"] = e.nodes_explored ? Json(*e.nodes_explored) : Json(nullptr);
    out["budget_status"] = e.budget_status;
    out["version"] = e.version;
    return out;
}

} // namespace tclique
