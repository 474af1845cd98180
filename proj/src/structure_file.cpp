#include "homcalc/structure_file.hpp"

#include "homcalc/poly_parser.hpp"

#include "json.hpp"

#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace homcalc {

using json = nlohmann::json;

StructureError::StructureError(Category category, std::size_t line, std::size_t column, std::string pointer,
                               std::string message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message +
            (pointer.empty() ? "" : " (at " + pointer + ")")),
      category_(category), line_(line), column_(column), pointer_(std::move(pointer)), message_(std::move(message))
{
}

namespace {

template <class... F>
struct Overloaded : F... {
    using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

// Input iterator that publishes how many bytes the JSON lexer has consumed.
struct CountingIterator {
    using iterator_category = std::input_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    const char* p = nullptr;
    const char* base = nullptr;
    std::size_t* consumed = nullptr;

    reference operator*() const { return *p; }
    CountingIterator& operator++()
    {
        ++p;
        *consumed = static_cast<std::size_t>(p - base);
        return *this;
    }
    CountingIterator operator++(int)
    {
        CountingIterator old = *this;
        ++*this;
        return old;
    }
    friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p == b.p; }
    friend bool operator!=(const CountingIterator& a, const CountingIterator& b) { return a.p != b.p; }
};

// Byte offset of every value in the document, keyed by JSON pointer.
class PositionIndex : public nlohmann::json_sax<json> {
public:
    PositionIndex(std::string_view text, const std::size_t* consumed) : text_(text), consumed_(consumed) {}

    const std::map<std::string, std::size_t>& offsets() const { return offsets_; }

    bool null() override { return value(); }
    bool boolean(bool) override { return value(); }
    bool number_integer(number_integer_t) override { return value(); }
    bool number_unsigned(number_unsigned_t) override { return value(); }
    bool number_float(number_float_t, const string_t&) override { return value(); }
    bool string(string_t&) override { return value(); }
    bool binary(binary_t&) override { return value(); }
    bool start_object(std::size_t) override { return open(false); }
    bool start_array(std::size_t) override { return open(true); }
    bool key(string_t& k) override
    {
        frames_.back().key = k;
        last_ = *consumed_;
        return true;
    }
    bool end_object() override { return close(); }
    bool end_array() override { return close(); }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

private:
    struct Frame {
        bool array;
        std::size_t index = 0;
        std::string key;
        std::string path;
    };

    std::string_view text_;
    const std::size_t* consumed_;
    std::size_t last_ = 0;
    std::vector<Frame> frames_;
    std::map<std::string, std::size_t> offsets_;

    std::string child_path()
    {
        if (frames_.empty()) return "";
        Frame& f = frames_.back();
        if (f.array) return f.path + "/" + std::to_string(f.index++);
        return f.path + "/" + f.key;
    }

    std::size_t start_of_value() const
    {
        std::size_t at = last_;
        while (at < text_.size() && std::string_view(" \t\r\n:,").find(text_[at]) != std::string_view::npos) ++at;
        return at;
    }

    std::string record()
    {
        std::string path = child_path();
        offsets_[path] = start_of_value();
        last_ = *consumed_;
        return path;
    }

    bool value()
    {
        record();
        return true;
    }
    bool open(bool array)
    {
        std::string path = record();
        frames_.push_back(Frame{array, 0, "", std::move(path)});
        return true;
    }
    bool close()
    {
        frames_.pop_back();
        last_ = *consumed_;
        return true;
    }
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

class Reader {
public:
    Reader(std::string_view text, std::map<std::string, std::size_t> offsets)
        : text_(text), offsets_(std::move(offsets))
    {
    }

    [[noreturn]] void fail(const std::string& pointer, const std::string& message, std::size_t shift = 0) const
    {
        std::string probe = pointer;
        auto it = offsets_.find(probe);
        while (it == offsets_.end() && !probe.empty()) {
            probe = probe.substr(0, probe.rfind('/'));
            it = offsets_.find(probe);
        }
        const std::size_t offset = it == offsets_.end() ? 0 : it->second + shift;
        auto [line, column] = line_column(text_, offset);
        throw StructureError(StructureError::Category::semantic, line, column, pointer, message);
    }

    const json& member(const json& node, const std::string& ptr, const char* key) const
    {
        if (!node.is_object()) fail(ptr, "expected an object");
        auto it = node.find(key);
        if (it == node.end()) fail(ptr, std::string("missing field \"") + key + "\"");
        return *it;
    }

    void only(const json& node, const std::string& ptr, std::initializer_list<const char*> keys) const
    {
        if (!node.is_object()) fail(ptr, "expected an object");
        for (const auto& [k, v] : node.items()) {
            bool known = false;
            for (const char* key : keys) known = known || k == key;
            if (!known) fail(ptr + "/" + k, "unknown field \"" + k + "\"");
        }
    }

    unsigned count(const json& v, const std::string& ptr) const
    {
        if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 16)
            fail(ptr, "expected an integer between 1 and 16");
        return static_cast<unsigned>(v.get<long long>());
    }

    // 1-based index in the file, 0-based in memory.
    unsigned index(const json& v, const std::string& ptr, unsigned bound) const
    {
        if (!v.is_number_integer()) fail(ptr, "expected an integer index");
        const long long i = v.get<long long>();
        if (i < 1 || i > static_cast<long long>(bound))
            fail(ptr, "index out of range: " + std::to_string(i) + " not in 1.." + std::to_string(bound));
        return static_cast<unsigned>(i - 1);
    }

    static constexpr std::size_t any_size = static_cast<std::size_t>(-1);

    const json& array(const json& v, const std::string& ptr, std::size_t expected = any_size) const
    {
        if (!v.is_array()) fail(ptr, "expected an array");
        if (expected != any_size && v.size() != expected)
            fail(ptr, "expected " + std::to_string(expected) + " entries, got " + std::to_string(v.size()));
        return v;
    }

    std::string text(const json& v, const std::string& ptr) const
    {
        if (!v.is_string()) fail(ptr, "expected a string");
        return v.get<std::string>();
    }

    Poly poly(const json& v, const std::string& ptr, const Variables& vars) const
    {
        const std::string s = text(v, ptr);
        try {
            return parse_poly(s, vars);
        } catch (const ParseError& e) {
            std::string expected;
            for (const auto& x : e.expected()) expected += (expected.empty() ? "" : ", ") + x;
            fail(ptr, "bad polynomial: expected " + expected + ", found " + e.found(), 1 + e.offset());
        }
    }

    Rational rational(const json& v, const std::string& ptr) const
    {
        const Poly p = poly(v, ptr, make_variables({}));
        return p.is_zero() ? Rational(0) : p.constant_value();
    }

    PolyMatrix poly_matrix(const json& v, const std::string& ptr, unsigned n, const Variables& vars) const
    {
        array(v, ptr, n);
        PolyMatrix m(vars, n, n);
        for (unsigned i = 0; i < n; ++i) {
            const std::string row = ptr + "/" + std::to_string(i);
            array(v[i], row, n);
            for (unsigned j = 0; j < n; ++j) m(i, j) = poly(v[i][j], row + "/" + std::to_string(j), vars);
        }
        return m;
    }

    RationalMatrix rational_matrix(const json& v, const std::string& ptr, unsigned n) const
    {
        array(v, ptr, n);
        RationalMatrix m(n, n);
        for (unsigned i = 0; i < n; ++i) {
            const std::string row = ptr + "/" + std::to_string(i);
            array(v[i], row, n);
            for (unsigned j = 0; j < n; ++j) m(i, j) = rational(v[i][j], row + "/" + std::to_string(j));
        }
        return m;
    }

    // Entries {"i", "j", "k", "c"} of an n^3 table; absent entries are zero.
    template <class T, class Convert>
    std::vector<T> table(const json& v, const std::string& ptr, unsigned n, T zero, Convert convert) const
    {
        array(v, ptr);
        std::vector<T> out(static_cast<std::size_t>(n) * n * n, zero);
        std::set<std::tuple<unsigned, unsigned, unsigned>> seen;
        for (std::size_t e = 0; e < v.size(); ++e) {
            const std::string at = ptr + "/" + std::to_string(e);
            const json& entry = v[e];
            only(entry, at, {"i", "j", "k", "c"});
            const unsigned i = index(member(entry, at, "i"), at + "/i", n);
            const unsigned j = index(member(entry, at, "j"), at + "/j", n);
            const unsigned k = index(member(entry, at, "k"), at + "/k", n);
            if (!seen.insert({i, j, k}).second) fail(at, "duplicate table entry");
            out[(i * n + j) * n + k] = convert(member(entry, at, "c"), at + "/c");
        }
        return out;
    }

    std::vector<SigmaDerivation> anchor(const json& v, const std::string& ptr, unsigned n, const RingAuto& sigma) const
    {
        array(v, ptr, n);
        std::vector<SigmaDerivation> out;
        const Variables& vars = sigma.variables();
        for (unsigned i = 0; i < n; ++i) {
            const std::string row = ptr + "/" + std::to_string(i);
            array(v[i], row, vars->size());
            std::vector<Poly> coefficients;
            for (std::size_t mu = 0; mu < vars->size(); ++mu)
                coefficients.push_back(poly(v[i][mu], row + "/" + std::to_string(mu), vars));
            out.emplace_back(sigma, std::move(coefficients));
        }
        return out;
    }

private:
    std::string_view text_;
    std::map<std::string, std::size_t> offsets_;
};

template <class F>
auto guarded(const Reader& r, const std::string& ptr, F f) -> decltype(f())
{
    try {
        return f();
    } catch (const StructureError&) {
        throw;
    } catch (const std::exception& e) {
        r.fail(ptr, e.what());
    }
}

RingAuto read_ring(const Reader& r, const json& root)
{
    const json& ring = r.member(root, "", "ring");
    r.only(ring, "/ring", {"variables", "sigma"});
    const json& names = r.array(r.member(ring, "/ring", "variables"), "/ring/variables");
    std::vector<std::string> list;
    for (std::size_t i = 0; i < names.size(); ++i) list.push_back(r.text(names[i], "/ring/variables/" + std::to_string(i)));
    Variables vars = guarded(r, "/ring/variables", [&] { return make_variables(list); });
    const json& images = r.array(r.member(ring, "/ring", "sigma"), "/ring/sigma", list.size());
    std::vector<Poly> polys;
    for (std::size_t i = 0; i < images.size(); ++i) polys.push_back(r.poly(images[i], "/ring/sigma/" + std::to_string(i), vars));
    if (list.empty()) return RingAuto::identity(vars);
    return guarded(r, "/ring/sigma", [&] { return RingAuto::from_images(vars, polys); });
}

HomLieAlgebra read_homlie(const Reader& r, const json& node, const std::string& ptr)
{
    const unsigned n = r.count(r.member(node, ptr, "dim"), ptr + "/dim");
    RationalMatrix twist = r.rational_matrix(r.member(node, ptr, "twist"), ptr + "/twist", n);
    auto c = r.table<Rational>(r.member(node, ptr, "structure"), ptr + "/structure", n, Rational(0),
                               [&](const json& v, const std::string& p) { return r.rational(v, p); });
    return guarded(r, ptr + "/twist", [&] { return HomLieAlgebra(n, std::move(c), twist); });
}

HomLieAlgebroid read_algebroid_body(const Reader& r, const json& node, const std::string& ptr, const HomBundle& bundle)
{
    const unsigned n = bundle.rank();
    const Variables& vars = bundle.variables();
    auto c = r.table<Poly>(r.member(node, ptr, "structure"), ptr + "/structure", n, Poly(vars),
                           [&](const json& v, const std::string& p) { return r.poly(v, p, vars); });
    auto anchor = r.anchor(r.member(node, ptr, "anchor"), ptr + "/anchor", n, bundle.twist());
    return guarded(r, ptr, [&] { return HomLieAlgebroid(bundle, std::move(c), std::move(anchor)); });
}

HomBundle read_bundle(const Reader& r, const json& node, const std::string& ptr, const RingAuto& sigma)
{
    const unsigned n = r.count(r.member(node, ptr, "rank"), ptr + "/rank");
    PolyMatrix twist = r.poly_matrix(r.member(node, ptr, "twist"), ptr + "/twist", n, sigma.variables());
    return guarded(r, ptr + "/twist", [&] { return HomBundle(SemilinearMap(std::move(twist), sigma)); });
}

HomLieAlgebroid read_algebroid(const Reader& r, const json& node, const std::string& ptr, const RingAuto& sigma)
{
    return read_algebroid_body(r, node, ptr, read_bundle(r, node, ptr, sigma));
}

HomCourantAlgebroid read_courant(const Reader& r, const json& node, const std::string& ptr, const RingAuto& sigma)
{
    HomBundle bundle = read_bundle(r, node, ptr, sigma);
    const unsigned n = bundle.rank();
    const Variables& vars = sigma.variables();
    PolyMatrix pairing = r.poly_matrix(r.member(node, ptr, "pairing"), ptr + "/pairing", n, vars);
    auto table = r.table<Poly>(r.member(node, ptr, "operation"), ptr + "/operation", n, Poly(vars),
                               [&](const json& v, const std::string& p) { return r.poly(v, p, vars); });
    auto anchor = r.anchor(r.member(node, ptr, "anchor"), ptr + "/anchor", n, sigma);
    return guarded(r, ptr + "/pairing", [&] {
        return HomCourantAlgebroid(bundle, std::move(pairing), std::move(table), std::move(anchor));
    });
}

const char* const kinds[] = {"homlie", "bialgebra", "algebroid", "poisson", "bialgebroid", "courant", "homlie2"};

using ojson = nlohmann::ordered_json;

ojson ring_json(const RingAuto& sigma)
{
    ojson names = ojson::array();
    ojson images = ojson::array();
    const Variables& vars = sigma.variables();
    for (std::size_t i = 0; i < vars->size(); ++i) {
        names.push_back(vars->name(i));
        images.push_back(sigma.images()[i].to_string());
    }
    return {{"variables", names}, {"sigma", images}};
}

template <class Matrix, class Text>
ojson matrix_json(const Matrix& m, Text text)
{
    ojson out = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(text(m(i, j)));
        out.push_back(row);
    }
    return out;
}

ojson matrix_json(const PolyMatrix& m)
{
    return matrix_json(m, [](const Poly& p) { return p.to_string(); });
}

ojson matrix_json(const RationalMatrix& m)
{
    return matrix_json(m, [](const Rational& q) { return to_string(q); });
}

template <class T, class Text>
ojson table_json(const std::vector<T>& c, unsigned n, Text text)
{
    ojson out = ojson::array();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) {
                const std::string v = text(c[(i * n + j) * n + k]);
                if (v != "0") out.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", v}});
            }
    return out;
}

ojson poly_table(const std::vector<Poly>& c, unsigned n)
{
    return table_json(c, n, [](const Poly& p) { return p.to_string(); });
}

ojson anchor_json(const std::vector<SigmaDerivation>& anchor)
{
    ojson out = ojson::array();
    for (const auto& a : anchor) {
        ojson row = ojson::array();
        for (const auto& c : a.coefficients()) row.push_back(c.to_string());
        out.push_back(row);
    }
    return out;
}

void add_homlie(ojson& out, const HomLieAlgebra& g)
{
    out["dim"] = g.dim();
    out["twist"] = matrix_json(g.twist());
    out["structure"] = table_json(g.structure(), g.dim(), [](const Rational& q) { return to_string(q); });
}

void add_algebroid(ojson& out, const HomLieAlgebroid& a, bool with_bundle)
{
    if (with_bundle) {
        out["rank"] = a.rank();
        out["twist"] = matrix_json(a.bundle().phi().matrix());
    }
    out["structure"] = poly_table(a.structure(), a.rank());
    out["anchor"] = anchor_json(a.anchors());
}

void add_courant(ojson& out, const HomCourantAlgebroid& c)
{
    out["rank"] = c.rank();
    out["twist"] = matrix_json(c.bundle().phi().matrix());
    out["pairing"] = matrix_json(c.pairing());
    out["operation"] = poly_table(c.circ(), c.rank());
    out["anchor"] = anchor_json(c.anchors());
}

ojson structure_json(const Structure& s)
{
    ojson out = ojson::object();
    out["kind"] = kind_of(s);
    std::visit(Overloaded{
                   [&](const HomLieAlgebra& g) { add_homlie(out, g); },
                   [&](const QuadraticHomLieAlgebra& q) {
                       add_homlie(out, q.algebra);
                       out["pairing"] = matrix_json(q.pairing);
                   },
                   [&](const PurelyHomLieBialgebra& b) {
                       add_homlie(out["algebra"], b.algebra());
                       add_homlie(out["dual"], b.dual());
                   },
                   [&](const HomLieAlgebroid& a) {
                       out["ring"] = ring_json(a.twist());
                       add_algebroid(out, a, true);
                   },
                   [&](const HomPoissonStructure& p) {
                       out["ring"] = ring_json(p.twist());
                       ojson entries = ojson::array();
                       const unsigned m = p.bivector().rank();
                       for (unsigned i = 0; i < m; ++i)
                           for (unsigned j = i + 1; j < m; ++j) {
                               const Poly& c = p.bivector().component((IndexSet{1} << i) | (IndexSet{1} << j));
                               if (!c.is_zero()) entries.push_back({{"i", i + 1}, {"j", j + 1}, {"c", c.to_string()}});
                           }
                       out["bivector"] = entries;
                   },
                   [&](const HomLieBialgebroid& b) {
                       out["ring"] = ring_json(b.algebroid().twist());
                       add_algebroid(out["algebroid"], b.algebroid(), true);
                       add_algebroid(out["dual"], b.dual(), false);
                   },
                   [&](const HomCourantAlgebroid& c) {
                       out["ring"] = ring_json(c.twist());
                       add_courant(out, c);
                   },
                   [&](const TwoAlgebraSource& t) {
                       out["ring"] = ring_json(t.courant.twist());
                       add_courant(out["courant"], t.courant);
                   },
               },
               s);
    return out;
}

bool is_flat(const ojson& v)
{
    for (const auto& child : v)
        if (child.is_structured()) return false;
    return true;
}

// Containers of scalars stay on one line; everything else is indented by two spaces per level.
void render(const ojson& v, std::string& out, int depth)
{
    if (!v.is_structured() || v.empty()) {
        out += v.dump();
        return;
    }
    const bool object = v.is_object();
    if (is_flat(v)) {
        out += object ? "{" : "[";
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (it != v.begin()) out += ", ";
            if (object) out += ojson(it.key()).dump() + ": ";
            out += it.value().dump();
        }
        out += object ? "}" : "]";
        return;
    }
    const std::string pad(2 * (depth + 1), ' ');
    out += object ? "{\n" : "[\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
        out += first ? "" : ",\n";
        first = false;
        out += pad;
        if (object) out += ojson(it.key()).dump() + ": ";
        render(it.value(), out, depth + 1);
    }
    out += "\n" + std::string(2 * depth, ' ') + (object ? "}" : "]");
}

} // namespace

std::string kind_of(const Structure& s)
{
    static const char* const by_index[] = {"homlie", "homlie", "bialgebra", "algebroid",
                                           "poisson", "bialgebroid", "courant", "homlie2"};
    return by_index[s.index()];
}

Structure parse_structure(std::string_view text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte ? e.byte - 1 : 0);
        std::string message = e.what();
        const auto cut = message.find("syntax error");
        if (cut != std::string::npos) message = message.substr(cut);
        throw StructureError(StructureError::Category::syntax, line, column, "", message);
    }

    std::size_t consumed = 0;
    PositionIndex index(text, &consumed);
    CountingIterator first{text.data(), text.data(), &consumed};
    CountingIterator last{text.data() + text.size(), text.data(), &consumed};
    json::sax_parse(first, last, &index);
    const Reader r(text, index.offsets());

    if (!root.is_object()) r.fail("", "expected a JSON object at the top level");
    const std::string kind = r.text(r.member(root, "", "kind"), "/kind");

    if (kind == "homlie") {
        r.only(root, "", {"kind", "dim", "twist", "structure", "pairing"});
        HomLieAlgebra g = read_homlie(r, root, "");
        if (!root.contains("pairing")) return g;
        RationalMatrix pairing = r.rational_matrix(root["pairing"], "/pairing", g.dim());
        return QuadraticHomLieAlgebra{std::move(g), std::move(pairing)};
    }
    if (kind == "bialgebra") {
        r.only(root, "", {"kind", "algebra", "dual"});
        HomLieAlgebra g = read_homlie(r, r.member(root, "", "algebra"), "/algebra");
        HomLieAlgebra d = read_homlie(r, r.member(root, "", "dual"), "/dual");
        return guarded(r, "/dual/twist", [&] { return PurelyHomLieBialgebra(g, d); });
    }
    if (kind == "algebroid") {
        r.only(root, "", {"kind", "ring", "rank", "twist", "structure", "anchor"});
        return read_algebroid(r, root, "", read_ring(r, root));
    }
    if (kind == "poisson") {
        r.only(root, "", {"kind", "ring", "bivector"});
        RingAuto sigma = read_ring(r, root);
        const Variables& vars = sigma.variables();
        const unsigned m = static_cast<unsigned>(vars->size());
        const json& entries = r.array(r.member(root, "", "bivector"), "/bivector");
        MultiVector pi(vars, m, 2);
        std::set<std::pair<unsigned, unsigned>> seen;
        for (std::size_t e = 0; e < entries.size(); ++e) {
            const std::string at = "/bivector/" + std::to_string(e);
            r.only(entries[e], at, {"i", "j", "c"});
            const unsigned i = r.index(r.member(entries[e], at, "i"), at + "/i", m);
            const unsigned j = r.index(r.member(entries[e], at, "j"), at + "/j", m);
            if (i >= j) r.fail(at, "bivector entries need i < j");
            if (!seen.insert({i, j}).second) r.fail(at, "duplicate bivector entry");
            pi.add((IndexSet{1} << i) | (IndexSet{1} << j), r.poly(r.member(entries[e], at, "c"), at + "/c", vars));
        }
        return guarded(r, "/bivector", [&] { return HomPoissonStructure(sigma, std::move(pi)); });
    }
    if (kind == "bialgebroid") {
        r.only(root, "", {"kind", "ring", "algebroid", "dual"});
        RingAuto sigma = read_ring(r, root);
        HomLieAlgebroid a = read_algebroid(r, r.member(root, "", "algebroid"), "/algebroid", sigma);
        const json& dual = r.member(root, "", "dual");
        r.only(dual, "/dual", {"structure", "anchor"});
        HomLieAlgebroid s = read_algebroid_body(r, dual, "/dual", a.bundle().dual());
        return guarded(r, "/dual", [&] { return HomLieBialgebroid(a, s); });
    }
    if (kind == "courant") {
        r.only(root, "", {"kind", "ring", "rank", "twist", "pairing", "operation", "anchor"});
        return read_courant(r, root, "", read_ring(r, root));
    }
    if (kind == "homlie2") {
        r.only(root, "", {"kind", "ring", "courant"});
        RingAuto sigma = read_ring(r, root);
        const json& body = r.member(root, "", "courant");
        r.only(body, "/courant", {"rank", "twist", "pairing", "operation", "anchor"});
        return TwoAlgebraSource{read_courant(r, body, "/courant", sigma)};
    }
    std::string known;
    for (const char* k : kinds) known += (known.empty() ? "" : ", ") + std::string(k);
    r.fail("/kind", "unknown kind \"" + kind + "\"; expected one of " + known);
}

std::string print_structure(const Structure& s)
{
    std::string out;
    render(structure_json(s), out, 0);
    return out + "\n";
}

VerificationReport verify_structure(const Structure& s, const SampleConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report = std::visit(
        Overloaded{
            [&](const HomLieAlgebra& g) { return verify_homlie(g); },
            [&](const QuadraticHomLieAlgebra& q) { return verify_quadratic(q); },
            [&](const PurelyHomLieBialgebra& b) { return verify_bialgebra(b); },
            [&](const HomLieAlgebroid& a) { return verify_algebroid(a, config); },
            [&](const HomPoissonStructure& p) { return verify_poisson(p, config); },
            [&](const HomLieBialgebroid& b) { return verify_bialgebroid(b, config); },
            [&](const HomCourantAlgebroid& c) { return verify_courant(c, config); },
            [&](const TwoAlgebraSource& t) {
                VerificationReport out = verify_courant(t.courant, config);
                if (!out.passed()) return out;
                out.append(verify_hom_lie_2(to_hom_lie_2(t.courant), config));
                out.structure = "Hom-Lie 2-algebra of a Hom-Courant algebroid of rank " + std::to_string(t.courant.rank());
                return out;
            },
        },
        s);
    report.sample_degree = config.max_degree;
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<std::string> derive_targets() { return {"double", "cotangent", "bialgebroid", "two-algebra", "dual", "induced-poisson"}; }

Structure derive_structure(const Structure& s, const std::string& target)
{
    auto incompatible = [&]() -> Structure {
        throw IncompatibleTarget("cannot derive '" + target + "' from a " + kind_of(s) + " structure");
    };
    if (target == "double") {
        if (auto b = std::get_if<HomLieBialgebroid>(&s)) return build_double(*b);
        if (auto b = std::get_if<PurelyHomLieBialgebra>(&s)) return build_double(*b);
        return incompatible();
    }
    if (target == "cotangent") {
        if (auto p = std::get_if<HomPoissonStructure>(&s)) return cotangent_algebroid(*p);
        return incompatible();
    }
    if (target == "bialgebroid") {
        if (auto p = std::get_if<HomPoissonStructure>(&s)) return from_poisson(*p);
        return incompatible();
    }
    if (target == "two-algebra") {
        if (auto c = std::get_if<HomCourantAlgebroid>(&s)) {
            to_hom_lie_2(*c);
            return TwoAlgebraSource{*c};
        }
        return incompatible();
    }
    if (target == "dual") {
        if (auto b = std::get_if<HomLieBialgebroid>(&s)) return dual_bialgebroid(*b);
        if (auto b = std::get_if<PurelyHomLieBialgebra>(&s)) return PurelyHomLieBialgebra(b->dual(), b->algebra());
        return incompatible();
    }
    if (target == "induced-poisson") {
        if (auto b = std::get_if<HomLieBialgebroid>(&s)) return induced_poisson(*b);
        return incompatible();
    }
    throw IncompatibleTarget("unknown derivation target '" + target + "'");
}

std::vector<std::string> catalog_names() { return {"tangent", "action", "xy-poisson", "standard-courant", "dim2-homlie"}; }

Structure catalog_entry(const std::string& name)
{
    if (name == "tangent") return tangent_algebroid(RingAuto::scaling(make_variables({"t"}), {2}));
    if (name == "action") {
        const RingAuto doubling = RingAuto::scaling(make_variables({"t"}), {2});
        auto g = HomLieAlgebra::abelian(2, RationalMatrix::diagonal({1, Rational(1, 2)}));
        g.set_bracket(0, 1, {0, 1});
        auto d = SigmaDerivation::basis(doubling, 0);
        return action_algebroid(g, {d.scaled(Poly::variable(doubling.variables(), 0) * Rational(-4)), d});
    }
    if (name == "xy-poisson") {
        Variables v = make_variables({"x", "y"});
        MultiVector pi(v, 2, 2);
        pi.add(0b11, Poly::variable(v, 0) * Poly::variable(v, 1));
        return HomPoissonStructure(RingAuto::scaling(v, {2, 2}), std::move(pi));
    }
    if (name == "standard-courant") return standard_courant(RingAuto::scaling(make_variables({"x", "y"}), {2, 3}));
    if (name == "dim2-homlie") {
        auto g = HomLieAlgebra::abelian(2, RationalMatrix::diagonal({1, Rational(1, 2)}));
        g.set_bracket(0, 1, {0, 1});
        return g;
    }
    throw std::out_of_range("unknown catalog entry '" + name + "'");
}

CatalogMutation catalog_mutation(const std::string& name)
{
    if (name == "tangent") return {"\"1/2\"", "\"1/3\"", "twist-morphism"};
    if (name == "action") return {"\"-4*t\"", "\"-3*t\"", "hom-jacobi"};
    if (name == "xy-poisson") return {"\"x*y\"", "\"x+y\"", "ad-invariance"};
    if (name == "standard-courant") return {"\"1/2\"", "\"1/5\"", "twist-morphism"};
    if (name == "dim2-homlie") return {"[\"1\", \"0\"]", "[\"2\", \"0\"]", "twist-morphism"};
    throw std::out_of_range("unknown catalog entry '" + name + "'");
}

std::string mutated_catalog_text(const std::string& name)
{
    const CatalogMutation m = catalog_mutation(name);
    std::string text = print_structure(catalog_entry(name));
    text.replace(text.find(m.from), m.from.size(), m.to);
    return text;
}

} // namespace homcalc
