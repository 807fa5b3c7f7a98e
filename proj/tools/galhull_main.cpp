// galhull: exact computations for linear codes over GF(p^e) under the
// Galois inner products <x,y>_ell = sum x_i y_i^(p^ell) -- duals, hulls,
// LCD certificates, monomial LCD-equivalence search, and matrix product
// code hulls.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "galhull/io.hpp"
#include "galhull/lcd_search.hpp"
#include "galhull/matrix_product.hpp"

using namespace galhull;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CodeError("E_IO", "cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_matrix(std::ostream& os, const MatrixGF& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) os << ' ';
            os << m.at(i, j).value;
        }
        os << '\n';
    }
}

const char* bool_word(bool b) { return b ? "true" : "false"; }

void run_hull(const std::string& path, unsigned ell_value) {
    const ParsedCode pc = parse_code_file(read_file(path));
    const GaloisLevel ell{ell_value};
    pc.field->check_level(ell);
    const LinearCode code = LinearCode::from_rows(pc.rows);
    const HullReport rep = hull(code, ell);
    std::cout << "h = " << rep.h << '\n';
    std::cout << "r = " << rep.r << '\n';
    // the Gram of the rows as given in the file; h and r do not depend on the
    // choice of generator
    std::cout << "gram:\n";
    print_matrix(std::cout, gram_matrix(pc.rows, ell));
    std::cout << "hull generator:\n";
    print_matrix(std::cout, rep.hull.generator());
    std::cout << "structured generator:\n";
    print_matrix(std::cout, rep.structured_gen);
}

void run_dual(const std::string& path, unsigned ell_value) {
    const ParsedCode pc = parse_code_file(read_file(path));
    const GaloisLevel ell{ell_value};
    pc.field->check_level(ell);
    const LinearCode dual = dual_galois(LinearCode::from_rows(pc.rows), ell);
    std::cout << serialize_code_file(dual.generator());
}

void run_check(const std::string& path, unsigned ell_value) {
    const ParsedCode pc = parse_code_file(read_file(path));
    const GaloisLevel ell{ell_value};
    pc.field->check_level(ell);
    const LinearCode code = LinearCode::from_rows(pc.rows);
    std::cout << "lcd: " << bool_word(is_lcd(code, ell)) << '\n';
    std::cout << "self-orthogonal: " << bool_word(is_self_orthogonal(code, ell)) << '\n';
    std::cout << "self-dual: " << bool_word(is_self_dual(code, ell)) << '\n';
}

void run_lcd_search(const std::string& path, unsigned ell_value, const std::string& strategy,
                    unsigned m, std::uint64_t budget, std::uint64_t seed) {
    const ParsedCode pc = parse_code_file(read_file(path));
    const GaloisLevel ell{ell_value};
    pc.field->check_level(ell);
    const LinearCode code = LinearCode::from_rows(pc.rows);

    LcdSearchConfig cfg;
    if (strategy == "exhaustive-units")
        cfg.strategy = LcdStrategy::ExhaustiveUnits;
    else if (strategy == "restricted-subfield-complement")
        cfg.strategy = LcdStrategy::RestrictedSubfieldComplement;
    else if (strategy == "seeded-random")
        cfg.strategy = LcdStrategy::SeededRandom;
    else
        throw CodeError("E_BAD_STRATEGY", "unknown strategy '" + strategy + "'");
    cfg.subfield_degree = m;
    cfg.budget = budget;
    cfg.seed = seed;

    const LcdSearchResult res = lcd_equivalent_search(code, ell, cfg);
    std::cout << "found: " << bool_word(res.found) << '\n';
    std::cout << "exhausted: " << bool_word(res.exhausted) << '\n';
    std::cout << "evaluations: " << res.evaluations << '\n';
    if (res.found) {
        std::cout << "x:";
        for (FieldElement v : res.x) std::cout << ' ' << v.value;
        std::cout << '\n';
        std::cout << "perm:";
        for (std::size_t p : res.transform->perm) std::cout << ' ' << p;
        std::cout << '\n';
        std::cout << "diag:";
        for (FieldElement v : res.transform->diag) std::cout << ' ' << v.value;
        std::cout << '\n';
        std::cout << "generator:\n";
        print_matrix(std::cout, res.code->generator());
    }
}

void run_mpc(const std::string& codes_arg, const std::string& matrix_path, unsigned ell_value,
             bool want_hull, bool want_bounds) {
    std::vector<LinearCode> codes;
    std::stringstream list(codes_arg);
    std::string path;
    FieldPtr field;
    while (std::getline(list, path, ',')) {
        const ParsedCode pc = parse_code_file(read_file(path));
        if (field && !field->same(*pc.field))
            throw CodeError("E_FIELD_MISMATCH", "'" + path + "' uses a different field header");
        field = pc.field;
        codes.push_back(LinearCode::from_rows(pc.rows));
    }
    if (codes.empty()) throw CodeError("E_IO", "no code files given");

    const ParsedCode pm = parse_code_file(read_file(matrix_path));
    if (!field->same(*pm.field))
        throw CodeError("E_FIELD_MISMATCH", "'" + matrix_path + "' uses a different field header");
    const GaloisLevel ell{ell_value};
    field->check_level(ell);

    const MatrixProductSpec spec(std::move(codes), pm.rows);
    std::cout << "generator:\n";
    print_matrix(std::cout, mpc_generator(spec));
    if (want_hull) {
        std::cout << "hull generator:\n";
        print_matrix(std::cout, mpc_hull(spec, ell).generator());
    }
    if (want_bounds) {
        const HullDimBounds b = mpc_hull_dim_bounds(spec, ell);
        std::cout << "bounds: lower=" << b.lower << " upper=" << b.upper
                  << " triangular=" << bool_word(b.triangular) << '\n';
    }
}

// Built-in golden suite: the worked examples the library is expected to
// reproduce exactly.
int run_verify_examples() {
    struct Item {
        const char* name;
        bool (*check)();
    };
    static const Item items[] = {
        {"f8-level1-gram",
         [] {
             auto f = FieldSpec::make(2, 3, std::vector<unsigned>{1, 1, 0, 1});
             const MatrixGF g(f, 2, 4, {1, 1, 3, 3, 0, 5, 1, 0});
             return gram_matrix(g, GaloisLevel{1}) == MatrixGF(f, 2, 2, {0, 4, 0, 7});
         }},
        {"f8-level1-hull-dimension",
         [] {
             auto f = FieldSpec::make(2, 3, std::vector<unsigned>{1, 1, 0, 1});
             const LinearCode c = LinearCode::from_rows(MatrixGF(f, 2, 4, {1, 1, 3, 3, 0, 5, 1, 0}));
             return hull(c, GaloisLevel{1}).h == 1;
         }},
        {"f4-hermitian-self-orthogonal",
         [] {
             auto f = FieldSpec::make(2, 2, std::vector<unsigned>{1, 1, 1});
             const LinearCode c = LinearCode::from_rows(MatrixGF(f, 1, 2, {1, 1}));
             return is_self_orthogonal(c, GaloisLevel{1}) && is_self_dual(c, GaloisLevel{1}) &&
                    !is_lcd(c, GaloisLevel{1});
         }},
        {"f4-hermitian-search-exhausts",
         [] {
             auto f = FieldSpec::make(2, 2, std::vector<unsigned>{1, 1, 1});
             const LinearCode c = LinearCode::from_rows(MatrixGF(f, 1, 2, {1, 1}));
             const LcdSearchResult res = lcd_equivalent_search(c, GaloisLevel{1}, {});
             return !res.found && res.exhausted && res.evaluations == 3;
         }},
        {"f3-mpc-generator",
         [] {
             auto f = FieldSpec::make(3, 1);
             std::vector<LinearCode> codes{
                 LinearCode::from_rows(MatrixGF(f, 2, 4, {1, 0, 1, 1, 0, 1, 1, 2})),
                 LinearCode::from_rows(MatrixGF(f, 1, 4, {1, 1, 1, 1}))};
             const MatrixProductSpec spec(std::move(codes), MatrixGF(f, 2, 2, {1, 1, 2, 1}));
             const MatrixGF expected(f, 3, 8,
                                     {1, 0, 1, 1, 1, 0, 1, 1,
                                      0, 1, 1, 2, 0, 1, 1, 2,
                                      2, 2, 2, 2, 1, 1, 1, 1});
             return mpc_generator(spec) == expected &&
                    outer_gram(spec, GaloisLevel{0}) == MatrixGF(f, 2, 2, {2, 0, 0, 2}) &&
                    rank(gram_matrix(expected, GaloisLevel{0})) == 1;
         }},
        {"f3-mpc-constituent-hulls",
         [] {
             auto f = FieldSpec::make(3, 1);
             const LinearCode c1 = LinearCode::from_rows(MatrixGF(f, 2, 4, {1, 0, 1, 1, 0, 1, 1, 2}));
             const LinearCode c2 = LinearCode::from_rows(MatrixGF(f, 1, 4, {1, 1, 1, 1}));
             return hull(c1, GaloisLevel{0}).h == 2 && is_self_orthogonal(c1, GaloisLevel{0}) &&
                    hull(c2, GaloisLevel{0}).h == 0 && is_lcd(c2, GaloisLevel{0});
         }},
        {"f3-mpc-hull",
         [] {
             auto f = FieldSpec::make(3, 1);
             std::vector<LinearCode> codes{
                 LinearCode::from_rows(MatrixGF(f, 2, 4, {1, 0, 1, 1, 0, 1, 1, 2})),
                 LinearCode::from_rows(MatrixGF(f, 1, 4, {1, 1, 1, 1}))};
             const MatrixProductSpec spec(std::move(codes), MatrixGF(f, 2, 2, {1, 1, 2, 1}));
             const LinearCode expected = LinearCode::from_rows(MatrixGF(
                 f, 2, 8, {1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 1, 2, 0, 1, 1, 2}));
             return mpc_hull(spec, GaloisLevel{0}) == expected;
         }},
    };

    bool all_pass = true;
    for (const Item& item : items) {
        bool ok = false;
        try {
            ok = item.check();
        } catch (const std::exception& e) {
            std::cout << "FAIL " << item.name << " (" << e.what() << ")\n";
            all_pass = false;
            continue;
        }
        std::cout << (ok ? "PASS " : "FAIL ") << item.name << '\n';
        all_pass = all_pass && ok;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Galois duals, hulls and LCD certificates for linear codes over GF(p^e)"};
    app.require_subcommand(1);

    std::string code_path, codes_arg, matrix_path;
    unsigned ell = 0;
    std::string strategy = "exhaustive-units";
    unsigned m = 1;
    std::uint64_t budget = 100000, seed = 0;
    bool want_hull = false, want_bounds = false;

    CLI::App* hull_cmd = app.add_subcommand("hull", "hull dimension, Gram matrix and structured generator");
    hull_cmd->add_option("--code", code_path, "code file")->required();
    hull_cmd->add_option("--ell", ell, "Galois level")->required();

    CLI::App* dual_cmd = app.add_subcommand("dual", "Galois dual generator, printed as a code file");
    dual_cmd->add_option("--code", code_path, "code file")->required();
    dual_cmd->add_option("--ell", ell, "Galois level")->required();

    CLI::App* check_cmd = app.add_subcommand("check", "LCD / self-orthogonal / self-dual predicates");
    check_cmd->add_option("--code", code_path, "code file")->required();
    check_cmd->add_option("--ell", ell, "Galois level")->required();

    CLI::App* search_cmd = app.add_subcommand("lcd-search", "find a monomially equivalent LCD code");
    search_cmd->add_option("--code", code_path, "code file")->required();
    search_cmd->add_option("--ell", ell, "Galois level")->required();
    search_cmd->add_option("--strategy", strategy,
                           "exhaustive-units | restricted-subfield-complement | seeded-random");
    search_cmd->add_option("--m", m, "subfield degree for the restricted strategy");
    search_cmd->add_option("--budget", budget, "candidate budget for the random strategy");
    search_cmd->add_option("--seed", seed, "seed for the random strategy");

    CLI::App* mpc_cmd = app.add_subcommand("mpc", "matrix product code generator, hull and bounds");
    mpc_cmd->add_option("--codes", codes_arg, "comma-separated constituent code files")->required();
    mpc_cmd->add_option("--matrix", matrix_path, "outer matrix file")->required();
    mpc_cmd->add_option("--ell", ell, "Galois level")->required();
    mpc_cmd->add_flag("--hull", want_hull, "also print the hull generator");
    mpc_cmd->add_flag("--bounds", want_bounds, "also print the hull dimension bounds");

    CLI::App* verify_cmd = app.add_subcommand("verify-examples", "run the built-in golden examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*hull_cmd) run_hull(code_path, ell);
        if (*dual_cmd) run_dual(code_path, ell);
        if (*check_cmd) run_check(code_path, ell);
        if (*search_cmd) run_lcd_search(code_path, ell, strategy, m, budget, seed);
        if (*mpc_cmd) run_mpc(codes_arg, matrix_path, ell, want_hull, want_bounds);
        if (*verify_cmd) return run_verify_examples();
    } catch (const CodeError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 0;
}
