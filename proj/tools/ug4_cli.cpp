// Command-line front end: exact dimension evaluation, catalog tables,
// algebra construction dumps, and verification runs.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "ug4/chevalley.hpp"
#include "ug4/splitcas.hpp"
#include "ug4/udim.hpp"
#include "ug4/verify.hpp"
#include "ug4/vparams.hpp"

namespace {

using namespace ug4;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

VogelPoint parse_point(const std::string& s) {
    auto parts = split_csv(s);
    if (parts.size() != 3) throw std::invalid_argument("--point expects a,b,c");
    return {parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2])};
}

Provenance parse_prov(const std::string& s) {
    if (s == "corrected") return Provenance::corrected;
    if (s == "as-printed") return Provenance::as_printed;
    throw std::invalid_argument("--provenance must be corrected or as-printed");
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out_file);
        if (!f) throw std::runtime_error("cannot open output file " + out_file);
        f << text;
        if (!text.empty() && text.back() != '\n') f << "\n";
    }
}

// large-dimension measurements need an explicit budget opt-in
constexpr int kStandardBudgetDim = 28;

int cmd_dim(const std::string& label_str, const std::string& algebra, const std::string& point,
            const std::string& format, const std::string& out_file) {
    Label label = parse_label(label_str);
    nlohmann::json j;
    j["label"] = label.str();
    Rat value;
    bool line_used = false;
    if (!algebra.empty()) {
        AlgebraId id = parse_algebra(algebra);
        value = dim_at_algebra(label, id, Provenance::corrected, &line_used);
        j["algebra"] = id.name;
    } else {
        value = dim(label, parse_point(point), Provenance::corrected);
        j["point"] = point;
    }
    j["value"] = rat_str(value);
    j["line_evaluated"] = line_used;
    if (line_used) std::cerr << "note: pole at the point; used line evaluation\n";
    if (format == "json") emit(j.dump(2), out_file);
    else emit(rat_str(value), out_file);  // csv and pretty coincide for a scalar
    return 0;
}

int cmd_table(const std::string& module, const std::string& algebra, const std::string& point,
              const std::string& format, const std::string& out_file) {
    std::string mod = canonical_module(module);
    DecompositionTable tab = module_table(mod, Provenance::corrected);
    VogelPoint pt;
    nlohmann::json j;
    j["module"] = mod;
    std::optional<AlgebraId> id;
    if (!algebra.empty()) {
        id = parse_algebra(algebra);
        pt = algebra_point(*id);
        j["algebra"] = id->name;
    } else {
        pt = parse_point(point);
        j["point"] = point;
    }
    struct Row {
        std::string label, eig, dim;
    };
    std::vector<Row> rows;
    Rat sum(0);
    for (const TableEntry& e : tab.entries) {
        Rat ev = casimir_eigenvalue(e.label, pt, 4, Provenance::corrected);
        Rat dv = id ? dim_at_algebra(e.label, *id, Provenance::corrected)
                    : dim(e.label, pt, Provenance::corrected);
        dv *= Rat(e.mult);
        dv.canonicalize();
        sum += dv;
        rows.push_back({e.label.str() + (e.mult == 1 ? "" : " x" + std::to_string(e.mult)),
                        rat_str(ev), rat_str(dv)});
    }
    sum.canonicalize();
    Rat total = tab.total_at(dim_g(pt));
    j["rows"] = nlohmann::json::array();
    for (const Row& r : rows)
        j["rows"].push_back({{"label", r.label}, {"eig4", r.eig}, {"dim", r.dim}});
    j["sum"] = rat_str(sum);
    j["closed_form_total"] = rat_str(total);
    if (format == "json") {
        emit(j.dump(2), out_file);
    } else if (format == "csv") {
        std::ostringstream os;
        os << "label,eig4,dim\n";
        for (const Row& r : rows) os << r.label << "," << r.eig << "," << r.dim << "\n";
        os << "sum,," << rat_str(sum) << "\n";
        os << "closed_form_total,," << rat_str(total) << "\n";
        emit(os.str(), out_file);
    } else {
        std::ostringstream os;
        os << "module " << mod << (id ? " at " + id->name : " at (" + point + ")") << "\n";
        for (const Row& r : rows)
            os << "  " << r.label << "  eig4=" << r.eig << "  dim=" << r.dim << "\n";
        os << "  sum = " << rat_str(sum) << "  closed form = " << rat_str(total) << "\n";
        emit(os.str(), out_file);
    }
    return sum == total ? 0 : 1;
}

int cmd_dump_algebra(const std::string& algebra, const std::string& out_file) {
    LieAlgebra alg = build_algebra(algebra);
    emit(alg.to_json(), out_file);
    return 0;
}

int cmd_verify(const std::string& algebras, const std::string& modules, const std::string& prov_str,
               const std::string& budget, const std::string& format, const std::string& out_file) {
    Provenance prov = parse_prov(prov_str);
    std::vector<std::string> algs = split_csv(algebras);
    std::vector<std::string> mods =
        (modules.empty() || modules == "all") ? module_names() : split_csv(modules);
    for (auto& m : mods) m = canonical_module(m);
    if (algs.empty()) throw std::invalid_argument("--algebras is required");

    // budget gate before any work
    for (const auto& a : algs) {
        LieAlgebra probe = build_algebra(a);
        if (probe.dimension > kStandardBudgetDim && budget != "stretch") {
            std::cerr << "refused: " << a << " (dim " << probe.dimension
                      << ") exceeds the standard measurement budget; pass --budget stretch\n";
            return 2;
        }
    }

    int nthreads = 1;
    if (const char* env = std::getenv("UG4_THREADS")) nthreads = std::max(1, std::atoi(env));
    nthreads = std::min<int>(nthreads, static_cast<int>(algs.size()));

    // one slot per (algebra, module), filled in parallel per algebra
    std::vector<std::vector<VerificationReport>> results(algs.size());
    std::vector<std::string> errors(algs.size());
    auto work = [&](size_t ai) {
        try {
            AlgebraId id = parse_algebra(algs[ai]);
            LieAlgebra alg = build_algebra(algs[ai]);
            for (const auto& m : mods) results[ai].push_back(verify_module(alg, id, m, prov));
        } catch (const std::exception& e) {
            errors[ai] = e.what();
        }
    };
    if (nthreads <= 1) {
        for (size_t ai = 0; ai < algs.size(); ++ai) work(ai);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&]() {
                for (size_t ai = next.fetch_add(1); ai < algs.size(); ai = next.fetch_add(1))
                    work(ai);
            });
        for (auto& th : pool) th.join();
    }

    bool all_pass = true;
    nlohmann::json j;
    j["provenance"] = prov_str;
    j["reports"] = nlohmann::json::array();
    std::ostringstream pretty, csv;
    csv << "algebra,module,eigenvalue,labels,predicted,measured,match\n";
    for (size_t ai = 0; ai < algs.size(); ++ai) {
        if (!errors[ai].empty()) throw std::runtime_error(algs[ai] + ": " + errors[ai]);
        for (const auto& rep : results[ai]) {
            all_pass = all_pass && rep.verdict;
            j["reports"].push_back(nlohmann::json::parse(report_to_json(rep)));
            pretty << rep.algebra << " " << rep.module << " [" << rep.backend
                   << "]: " << (rep.verdict ? "pass" : "FAIL") << "\n";
            for (const auto& row : rep.rows) {
                std::string labels;
                for (const auto& l : row.labels) labels += (labels.empty() ? "" : ";") + l.str();
                csv << rep.algebra << "," << rep.module << "," << rat_str(row.eigenvalue) << ","
                    << labels << "," << rat_str(row.predicted) << "," << row.measured << ","
                    << (row.match ? "1" : "0") << "\n";
                if (!row.match)
                    pretty << "  eig " << rat_str(row.eigenvalue) << " [" << labels
                           << "]: predicted " << rat_str(row.predicted) << ", measured "
                           << row.measured << "\n";
            }
        }
    }
    j["verdict"] = all_pass ? "pass" : "fail";
    pretty << (all_pass ? "all pass" : "FAILURES present") << "\n";
    if (format == "json") emit(j.dump(2), out_file);
    else if (format == "csv") emit(csv.str(), out_file);
    else emit(pretty.str(), out_file);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact universal dimension catalog and split-Casimir verification"};
    app.require_subcommand(1);

    std::string label, algebra, algebras, point, module, modules, out_file;
    std::string format = "pretty", budget = "standard", prov = "corrected";

    auto* dim_cmd = app.add_subcommand("dim", "evaluate one dimension formula exactly");
    dim_cmd->add_option("label", label, "catalog label, e.g. Y2', K3")->required();
    auto* da = dim_cmd->add_option("--algebra", algebra, "algebra name, e.g. sl3, e8");
    auto* dp = dim_cmd->add_option("--point", point, "parameter point a,b,c (rationals)");
    dim_cmd->add_option("--format", format, "json|csv|pretty");
    dim_cmd->add_option("--out", out_file, "write output to file");
    da->excludes(dp);

    auto* table_cmd = app.add_subcommand("table", "full catalog table for a module");
    table_cmd->add_option("module", module, "4|31|22|211|1111|sym2|asym2|asym3")->required();
    auto* ta = table_cmd->add_option("--algebra", algebra, "algebra name");
    auto* tp = table_cmd->add_option("--point", point, "parameter point a,b,c");
    table_cmd->add_option("--format", format, "json|csv|pretty");
    table_cmd->add_option("--out", out_file, "write output to file");
    ta->excludes(tp);

    auto* verify_cmd = app.add_subcommand("verify", "measure spectra and compare to predictions");
    verify_cmd->add_option("--algebras", algebras, "comma-separated algebra names")->required();
    verify_cmd->add_option("--modules", modules, "comma-separated module labels or 'all'");
    verify_cmd->add_option("--provenance", prov, "corrected|as-printed");
    verify_cmd->add_option("--budget", budget, "standard|stretch");
    verify_cmd->add_option("--format", format, "json|csv|pretty");
    verify_cmd->add_option("--out", out_file, "write output to file");

    auto* dump_cmd = app.add_subcommand("dump-algebra", "exact structure constants and Killing form");
    dump_cmd->add_option("--algebra", algebra, "algebra name")->required();
    dump_cmd->add_option("--out", out_file, "write output to file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dim_cmd->parsed()) {
            if (algebra.empty() && point.empty())
                throw std::invalid_argument("dim needs --algebra or --point");
            return cmd_dim(label, algebra, point, format, out_file);
        }
        if (table_cmd->parsed()) {
            if (algebra.empty() && point.empty())
                throw std::invalid_argument("table needs --algebra or --point");
            return cmd_table(module, algebra, point, format, out_file);
        }
        if (verify_cmd->parsed())
            return cmd_verify(algebras, modules, prov, budget, format, out_file);
        if (dump_cmd->parsed()) return cmd_dump_algebra(algebra, out_file);
    } catch (const PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
