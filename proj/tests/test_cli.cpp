#include "homcalc/cli.hpp"
#include "homcalc/structure_file.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

using namespace homcalc;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir()
    {
        path_ = fs::temp_directory_path() /
                ("homcalc_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const
    {
        const auto p = (path_ / name).string();
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }
    std::string path(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string emitted(const std::string& name) { return print_structure(catalog_entry(name)); }

// Replaces the first occurrence; the replacement differs from the original in exactly one byte.
std::string mutate(std::string text, const std::string& from, const std::string& to)
{
    const auto at = text.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    EXPECT_EQ(from.size(), to.size());
    text.replace(at, from.size(), to);
    return text;
}

} // namespace

TEST(StructureFile, PrintParseRoundTripOnCatalog)
{
    for (const auto& name : catalog_names()) {
        const std::string text = emitted(name);
        EXPECT_EQ(print_structure(parse_structure(text)), text) << name;
        EXPECT_EQ(text.back(), '\n');
    }
}

TEST(StructureFile, CatalogDirectoryMatchesBuiltIns)
{
    for (const auto& name : catalog_names())
        EXPECT_EQ(slurp(std::string(HOMCALC_CATALOG_DIR) + "/" + name + ".json"), emitted(name)) << name;
}

TEST(StructureFile, RoundTripOnDerivedStructures)
{
    const std::vector<std::pair<std::string, std::string>> pipelines = {
        {"xy-poisson", "cotangent"}, {"xy-poisson", "bialgebroid"}, {"xy-poisson", "induced-poisson"}, {"standard-courant", "two-algebra"},
        {"dim2-homlie", "dual"}};
    for (const auto& [name, target] : pipelines) {
        Structure s = catalog_entry(name);
        if (target == "induced-poisson") s = from_poisson(std::get<HomPoissonStructure>(s));
        if (target == "dual") s = PurelyHomLieBialgebra(std::get<HomLieAlgebra>(s),
                                                        HomLieAlgebra::abelian(2, RationalMatrix::diagonal({1, 2})));
        const std::string text = print_structure(derive_structure(s, target));
        EXPECT_EQ(print_structure(parse_structure(text)), text) << name << " " << target;
    }
}

TEST(StructureFile, PolynomialCoefficientsRoundTrip)
{
    const std::string text = R"({"kind": "poisson", "ring": {"variables": ["t", "u"], "sigma": ["t", "u"]},
        "bivector": [{"i": 1, "j": 2, "c": "2*t^2 - 1/3"}]})";
    const std::string printed = print_structure(parse_structure(text));
    EXPECT_NE(printed.find("\"2*t^2 - 1/3\""), std::string::npos) << printed;
    EXPECT_EQ(print_structure(parse_structure(printed)), printed);
}

TEST(StructureFile, IndexOutOfRangeIsSemanticWithPosition)
{
    const std::string text = "{\"kind\": \"homlie\", \"dim\": 2,\n"
                             " \"twist\": [[\"1\", \"0\"], [\"0\", \"1\"]],\n"
                             " \"structure\": [{\"i\": 1, \"j\": 2, \"k\": 3, \"c\": \"1\"}]}\n";
    try {
        parse_structure(text);
        FAIL() << "accepted out-of-range index";
    } catch (const StructureError& e) {
        EXPECT_EQ(e.category(), StructureError::Category::semantic);
        EXPECT_NE(e.message().find("index out of range"), std::string::npos) << e.message();
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 38u);
        EXPECT_EQ(e.pointer(), "/structure/0/k");
    }
}

TEST(StructureFile, SyntaxErrorHasPosition)
{
    const std::string text = "{\"kind\": \"homlie\", \"dim\": 2,\n \"twist\": [[\"1\"]]\n \"structure\": []}";
    try {
        parse_structure(text);
        FAIL() << "accepted malformed JSON";
    } catch (const StructureError& e) {
        EXPECT_EQ(e.category(), StructureError::Category::syntax);
        EXPECT_EQ(e.line(), 3u);
        EXPECT_GT(e.column(), 1u);
    }
}

TEST(StructureFile, BadPolynomialPointsIntoString)
{
    const std::string text = "{\"kind\": \"poisson\", \"ring\": {\"variables\": [\"x\", \"y\"], \"sigma\": [\"x\", \"y\"]},\n"
                             " \"bivector\": [{\"i\": 1, \"j\": 2, \"c\": \"x^y\"}]}";
    try {
        parse_structure(text);
        FAIL() << "accepted bad polynomial";
    } catch (const StructureError& e) {
        EXPECT_EQ(e.category(), StructureError::Category::semantic);
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 40u) << e.what();
        EXPECT_EQ(e.pointer(), "/bivector/0/c");
    }
}

TEST(StructureFile, RejectsUnknownFieldsAndKinds)
{
    EXPECT_THROW(parse_structure(R"({"kind": "lie"})"), StructureError);
    EXPECT_THROW(parse_structure(R"({"kind": "homlie", "dim": 1, "twist": [["1"]], "structure": [], "extra": 1})"),
                 StructureError);
    EXPECT_THROW(parse_structure(R"({"kind": "homlie", "dim": 2, "twist": [["1"]], "structure": []})"),
                 StructureError);
    EXPECT_THROW(parse_structure(R"({"kind": "homlie", "dim": 0, "twist": [], "structure": []})"), StructureError);
}

TEST(StructureFile, HomliePairingGivesQuadratic)
{
    const std::string text = R"({"kind": "homlie", "dim": 2, "twist": [["1", "0"], ["0", "1"]], "structure": [],
        "pairing": [["0", "1"], ["1", "0"]]})";
    const Structure s = parse_structure(text);
    EXPECT_TRUE(std::holds_alternative<QuadraticHomLieAlgebra>(s));
    EXPECT_TRUE(verify_structure(s).passed());
}

TEST(Cli, CatalogListAndEmit)
{
    const CliRun list = run({"catalog", "list"});
    EXPECT_EQ(list.code, 0);
    for (const auto& name : catalog_names()) EXPECT_NE(list.out.find(name), std::string::npos);
    const CliRun emit = run({"catalog", "emit", "tangent"});
    EXPECT_EQ(emit.code, 0);
    EXPECT_EQ(emit.out, emitted("tangent"));
    EXPECT_EQ(run({"catalog", "emit", "nonesuch"}).code, 2);
}

TEST(Cli, CatalogEntriesVerify)
{
    TempDir dir;
    for (const auto& name : catalog_names()) {
        const CliRun r = run({"verify", dir.write(name + ".json", emitted(name))});
        EXPECT_EQ(r.code, 0) << name << "\n" << r.out;
        EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
    }
}

TEST(Cli, DocumentedMutationsFailWithNamedAxiom)
{
    TempDir dir;
    for (const auto& name : catalog_names()) {
        const CatalogMutation m = catalog_mutation(name);
        const std::string original = emitted(name);
        const std::string text = mutated_catalog_text(name);
        EXPECT_EQ(text, mutate(original, m.from, m.to));
        ASSERT_EQ(text.size(), original.size());
        std::size_t diff = 0;
        for (std::size_t i = 0; i < text.size(); ++i) diff += text[i] != original[i];
        EXPECT_EQ(diff, 1u) << name;
        const CliRun r = run({"verify", dir.write(name + ".json", text)});
        EXPECT_EQ(r.code, 1) << name << "\n" << r.out;
        EXPECT_NE(r.out.find("result: FAIL (" + m.axiom + ")"), std::string::npos) << name << "\n" << r.out;
    }
}

TEST(Cli, MalformedInputExitsTwo)
{
    TempDir dir;
    const CliRun syntax = run({"verify", dir.write("a.json", "{\"kind\": \"homlie\",\n  \"dim\" 2}")});
    EXPECT_EQ(syntax.code, 2);
    EXPECT_NE(syntax.err.find("a.json:2:"), std::string::npos) << syntax.err;
    EXPECT_NE(syntax.err.find("syntax error"), std::string::npos);

    const std::string text = "{\"kind\": \"homlie\", \"dim\": 2,\n"
                             " \"twist\": [[\"1\", \"0\"], [\"0\", \"1\"]],\n"
                             " \"structure\": [{\"i\": 1, \"j\": 2, \"k\": 3, \"c\": \"1\"}]}\n";
    const CliRun range = run({"verify", dir.write("b.json", text)});
    EXPECT_EQ(range.code, 2);
    EXPECT_NE(range.err.find("b.json:3:38: error: index out of range"), std::string::npos) << range.err;

    EXPECT_EQ(run({"verify", dir.path("missing.json")}).code, 2);
    EXPECT_EQ(run({"verify"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, JsonReportAndReportFile)
{
    TempDir dir;
    const std::string file = dir.write("x.json", mutate(emitted("tangent"), "\"1/2\"", "\"1/3\""));
    const std::string report = dir.path("report.json");
    const CliRun r = run({"verify", file, "--json", "--report", report, "--max-degree", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(slurp(report), r.out);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["first_failure"], "twist-morphism");
    EXPECT_EQ(j["sample_degree"], 2);
    bool witnessed = false;
    for (const auto& a : j["axioms"])
        if (a["id"] == "twist-morphism") witnessed = a.contains("witness") && a["status"] == "fail";
    EXPECT_TRUE(witnessed);
    EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(Cli, TextReportIsDeterministic)
{
    TempDir dir;
    const std::string file = dir.write("a.json", emitted("action"));
    EXPECT_EQ(run({"verify", file}).out, run({"verify", file}).out);
}

TEST(Cli, DeriveCotangentFromPoisson)
{
    TempDir dir;
    const std::string out = dir.path("cot.json");
    const CliRun r = run({"derive", dir.write("p.json", emitted("xy-poisson")), "cotangent", "--out", out});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("derived algebroid: verifies"), std::string::npos) << r.err;
    EXPECT_EQ(run({"verify", out}).code, 0);
}

TEST(Cli, DeriveDoubleFromBialgebroid)
{
    TempDir dir;
    const CliRun bialgebroid = run({"derive", dir.write("p.json", emitted("xy-poisson")), "bialgebroid"});
    ASSERT_EQ(bialgebroid.code, 0) << bialgebroid.err;
    EXPECT_NE(bialgebroid.err.find("derived bialgebroid: verifies"), std::string::npos) << bialgebroid.err;
    const CliRun back = run({"derive", dir.write("b.json", bialgebroid.out), "induced-poisson"});
    EXPECT_EQ(back.out, emitted("xy-poisson"));
    const CliRun dbl = run({"derive", dir.path("b.json"), "double", "--max-degree", "2"});
    EXPECT_EQ(dbl.code, 0) << dbl.err;
    EXPECT_NE(dbl.err.find("derived courant: verifies"), std::string::npos) << dbl.err;
    EXPECT_EQ(kind_of(parse_structure(dbl.out)), "courant");
}

TEST(Cli, DeriveTwoAlgebraFromCourant)
{
    TempDir dir;
    const CliRun r = run({"derive", dir.write("c.json", emitted("standard-courant")), "two-algebra", "--max-degree", "1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"kind\": \"homlie2\""), std::string::npos);
    const CliRun v = run({"verify", dir.write("h.json", r.out), "--max-degree", "1"});
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_NE(v.out.find("PASS c1"), std::string::npos) << v.out;
}

TEST(Cli, DeriveIncompatibleTargetExitsTwo)
{
    TempDir dir;
    const CliRun r = run({"derive", dir.write("g.json", emitted("dim2-homlie")), "cotangent"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("cannot derive 'cotangent' from a homlie structure"), std::string::npos) << r.err;
    EXPECT_EQ(run({"derive", dir.path("g.json"), "nonesuch"}).code, 2);
}

TEST(Cli, DeriveRefusesFailingInput)
{
    TempDir dir;
    const std::string text = mutate(emitted("xy-poisson"), "\"x*y\"", "\"x+y\"");
    const CliRun r = run({"derive", dir.write("p.json", text), "cotangent", "--max-degree", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("derivation refused"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("ad-invariance"), std::string::npos) << r.err;
}
