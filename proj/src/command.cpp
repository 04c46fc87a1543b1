#include "bolsuper/command.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "bolsuper/algebra_io.hpp"
#include "bolsuper/catalog.hpp"
#include "bolsuper/constructions.hpp"
#include "bolsuper/error.hpp"
#include "bolsuper/forms.hpp"

namespace bolsuper {

namespace {

// Collects human text or machine facts; only one of them is emitted.
class Output {
public:
    explicit Output(bool machine) : machine_(machine) {}

    void line(const std::string& s) {
        if (!machine_) text_ += s + "\n";
    }
    void raw(const std::string& s) { raw_ += s; }
    void fact(const std::string& key, const std::string& value) { facts_.emplace_back(key, value); }
    void fact(const std::string& key, bool value) { fact(key, std::string(value ? "true" : "false")); }
    void fact(const std::string& key, std::size_t value) { fact(key, std::to_string(value)); }

    std::string str() const {
        if (!raw_.empty()) return raw_;
        if (!machine_) return text_;
        auto facts = facts_;
        std::stable_sort(facts.begin(), facts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::string out;
        for (const auto& [k, v] : facts) out += k + " = " + v + "\n";
        return out;
    }

private:
    bool machine_;
    std::string text_;
    std::string raw_;
    std::vector<std::pair<std::string, std::string>> facts_;
};

std::string padded(std::size_t i, std::size_t count) {
    std::string s = std::to_string(i);
    const std::size_t width = std::to_string(count).size();
    return std::string(width - s.size(), '0') + s;
}

std::string yesNo(bool b) { return b ? "yes" : "no"; }

std::string tuple(const SuperSpace& space, const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + space.label(idx[k]);
    return s;
}

std::string defectText(const SuperSpace& space, const Vector& defect) {
    return defect.size() == 1 && space.dim() != 1 ? to_string(defect[0]) : formatVector(space, defect);
}

void emitWitnesses(Output& out, const SuperSpace& space, const std::string& prefix, const CheckReport& r) {
    const std::size_t n = r.witnesses.size();
    out.fact(prefix + "witnesses", n);
    for (std::size_t i = 0; i < n; ++i) {
        const Witness& w = r.witnesses[i];
        const std::string key = prefix + "witness." + padded(i + 1, n) + ".";
        const std::string t = tuple(space, w.indices), d = defectText(space, w.defect);
        out.line("  " + w.axiom + " (" + t + "): " + d);
        out.fact(key + "axiom", w.axiom);
        out.fact(key + "tuple", t);
        out.fact(key + "defect", d);
    }
}

void emitCheck(Output& out, const AlgebraDef& a, AxiomKind kind, const CheckReport& r) {
    const std::string k(to_string(kind));
    if (r.passed())
        out.line("PASS " + a.name() + " " + k);
    else
        out.line("FAIL " + a.name() + " " + k + " (" + std::to_string(r.witnesses.size()) + " witnesses)");
    out.fact("algebra", a.name());
    out.fact("kind", k);
    out.fact("result", std::string(r.passed() ? "pass" : "fail"));
    emitWitnesses(out, a.space(), "", r);
}

// Prints the failing check and returns false when a fails kind.
bool requireKind(Output& out, const AlgebraDef& a, AxiomKind kind) {
    const CheckReport r = checkAxioms(a, kind);
    if (!r.passed()) emitCheck(out, a, kind, r);
    return r.passed();
}

void emitGram(Output& out, const std::string& prefix, const SuperSpace& space, const Matrix& g) {
    const std::size_t d = space.dim();
    std::vector<std::vector<std::string>> cells(d + 1, std::vector<std::string>(d + 1));
    for (std::size_t j = 0; j < d; ++j) cells[0][j + 1] = space.label(j);
    for (std::size_t i = 0; i < d; ++i) {
        cells[i + 1][0] = space.label(i);
        for (std::size_t j = 0; j < d; ++j) {
            cells[i + 1][j + 1] = to_string(g(i, j));
            out.fact(prefix + "." + space.label(i) + "." + space.label(j), cells[i + 1][j + 1]);
        }
    }
    std::size_t width = 0;
    for (const auto& row : cells)
        for (const auto& c : row) width = std::max(width, c.size());
    for (const auto& row : cells) {
        std::string s = " ";
        for (const auto& c : row) s += " " + std::string(width - c.size(), ' ') + c;
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out.line(s);
    }
}

void emitSubspace(Output& out, const std::string& prefix, const std::string& title, const SuperSpace& space,
                  const Subspace& v) {
    out.line(title + ": dim " + std::to_string(v.dim()));
    out.fact(prefix + ".dim", v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const std::string s = formatVector(space, v.basis()[i]);
        out.line("  " + s);
        out.fact(prefix + ".basis." + padded(i + 1, v.dim()), s);
    }
}

void emitForm(Output& out, const std::string& prefix, const std::string& title, const BilinearForm& f) {
    out.line(title + ":");
    emitGram(out, prefix + ".gram", f.space(), f.gram());
    const Subspace rad = radical(f);
    out.line("supersymmetric: " + yesNo(f.isSupersymmetric()));
    out.line("consistent: " + yesNo(f.isConsistent()));
    out.line("nondegenerate: " + yesNo(rad.dim() == 0) + " (radical dim " + std::to_string(rad.dim()) + ")");
    out.fact(prefix + ".supersymmetric", f.isSupersymmetric());
    out.fact(prefix + ".consistent", f.isConsistent());
    out.fact(prefix + ".nondegenerate", rad.dim() == 0);
    out.fact(prefix + ".radical.dim", rad.dim());
}

std::string operatorText(const SuperSpace& space, const GradedMap& op) {
    std::string s;
    for (std::size_t k = 0; k < space.dim(); ++k) {
        const Vector img = op(space.basis(k));
        if (isZero(img)) continue;
        s += (s.empty() ? "" : ", ") + space.label(k) + " -> " + formatVector(space, img);
    }
    return s.empty() ? "0" : s;
}

void emitPairs(Output& out, const std::string& prefix, const SuperSpace& space, const std::vector<std::string>& names,
               const std::vector<PseudoPair>& basis) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const PseudoPair& p = basis[k];
        const std::string deg = p.degree() == Parity::Even ? "even" : "odd";
        const std::string comp = formatVector(space, p.companion()), op = operatorText(space, p.op());
        out.line("  " + names[k] + " (" + deg + "): companion " + comp + "; " + op);
        const std::string key = prefix + "." + names[k] + ".";
        out.fact(key + "degree", deg);
        out.fact(key + "companion", comp);
        for (std::size_t i = 0; i < space.dim(); ++i) {
            const Vector img = p.op()(space.basis(i));
            if (!isZero(img)) out.fact(key + "image." + space.label(i), formatVector(space, img));
        }
    }
}

std::vector<std::string> pairNames(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back("h" + std::to_string(k + 1));
    return names;
}

AlgebraDef load(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        try {
            AlgebraDef a = loadAlgebraFile(arg);
            if (a.name().empty()) a = a.renamed(std::filesystem::path(arg).stem().string());
            return a;
        } catch (const ParseError& e) {
            throw Error(ErrorKind::Parse, arg + ": " + e.what());
        }
    }
    if (isCatalogKey(arg)) return catalogEntry(arg).algebra;
    throw Error(ErrorKind::Usage, "'" + arg + "' is neither a readable file nor a catalog key");
}

void writeOrPrint(Output& out, const std::string& path, const AlgebraDef& result) {
    const std::string text = serializeAlgebra(result);
    if (path.empty()) {
        out.raw(text);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!(f << text)) throw Error(ErrorKind::Usage, "cannot write '" + path + "'");
    out.line("wrote " + result.name() + " to " + path);
    out.fact("algebra", result.name());
    out.fact("output", path);
}

struct Args {
    std::string format = "human";
    std::string file;
    std::string kind;
    std::string output;
    std::string method = "both";
    std::string key;
    bool maximal = false;
    bool inner = false;
    bool max = false;
};

int cmdEnvelope(Output& out, const AlgebraDef& a, bool maximal) {
    if (!requireKind(out, a, AxiomKind::Bol)) return 1;
    const PairSpace h = maximal ? psSpace(a) : ipsSpace(a);
    const EnvelopingAlgebra env = enveloping(a, h);
    const SuperSpace& ls = env.lie.space();
    out.line(env.lie.name() + " " + (maximal ? "maximal" : "standard"));
    out.line("dim B = " + std::to_string(env.baseDim()) + ", dim H = " + std::to_string(env.pairDim()) +
             ", dim L = " + std::to_string(ls.dim()));
    out.line("Lie axioms: PASS");
    out.fact("algebra", a.name());
    out.fact("envelope", std::string(maximal ? "maximal" : "standard"));
    out.fact("dim.base", env.baseDim());
    out.fact("dim.pairs", env.pairDim());
    out.fact("dim.total", ls.dim());
    out.fact("lie", std::string("pass"));
    std::vector<std::string> names;
    for (std::size_t k = 0; k < env.pairDim(); ++k) names.push_back(ls.label(env.pairIndex(k)));
    out.line("H basis:");
    emitPairs(out, "pair", a.space(), names, h.basis());
    out.line("brackets:");
    const auto& c = env.lie.binary();
    for (std::size_t i = 0; i < ls.dim(); ++i)
        for (std::size_t j = i; j < ls.dim(); ++j) {
            if (isZero(c(i, j))) continue;
            const std::string v = formatVector(ls, c(i, j));
            out.line("  [" + ls.label(i) + "," + ls.label(j) + "] = " + v);
            out.fact("bracket." + ls.label(i) + "." + ls.label(j), v);
        }
    return 0;
}

int cmdKillingRicci(Output& out, const AlgebraDef& a, const std::string& method) {
    if (!requireKind(out, a, AxiomKind::Bol)) return 1;
    out.fact("algebra", a.name());
    out.line("Killing-Ricci form of " + a.name());
    std::optional<BilinearForm> direct, restriction;
    if (method != "restriction") {
        direct = killingRicci(a, RicciMethod::Direct);
        emitForm(out, "direct", "direct", *direct);
    }
    if (method != "direct") {
        restriction = killingRicci(a, RicciMethod::Restriction);
        emitForm(out, "restriction", "restriction", *restriction);
    }
    if (direct && restriction) {
        const bool agree = *direct == *restriction;
        out.line("routes agree: " + yesNo(agree));
        out.fact("agree", agree);
        if (!agree) throw Error(ErrorKind::Internal, "direct and restriction Killing-Ricci forms differ");
    }
    return 0;
}

int cmdPseudo(Output& out, const AlgebraDef& a, bool maximal) {
    if (!requireKind(out, a, AxiomKind::Bol)) return 1;
    const PairSpace s = maximal ? psSpace(a) : ipsSpace(a);
    const std::string which = maximal ? "PS" : "IPS";
    out.line(which + "(" + a.name() + "): dim " + std::to_string(s.dim()) + ", closed " + yesNo(s.closed()));
    out.fact("algebra", a.name());
    out.fact("space", which);
    out.fact("dim", s.dim());
    out.fact("closed", s.closed());
    if (maximal) {
        const bool inner = s.contains(ipsSpace(a));
        out.line("contains IPS: " + yesNo(inner));
        out.fact("contains_ips", inner);
    }
    emitPairs(out, "pair", a.space(), pairNames(s.dim()), s.basis());
    return 0;
}

int cmdReport(Output& out, const AlgebraDef& a) {
    if (!requireKind(out, a, AxiomKind::Bol)) return 1;
    const SemisimplicityReport r = semisimplicityReport(a);
    const SuperSpace& space = a.space();
    out.line("report for " + a.name());
    out.line("dim B = " + std::to_string(r.baseDim) + ", dim L(B) = " + std::to_string(r.envelopeDim));
    out.fact("algebra", a.name());
    out.fact("dim.base", r.baseDim);
    out.fact("dim.envelope", r.envelopeDim);
    emitForm(out, "beta", "Killing-Ricci form beta", r.beta);

    const InvariantReport inv = checkInvariant(a, r.beta);
    std::size_t inv1 = 0, inv2 = 0;
    for (const auto& w : inv.identities.witnesses) {
        if (w.axiom == "inv1") ++inv1;
        if (w.axiom == "inv2") ++inv2;
    }
    out.line("beta satisfies inv1: " + yesNo(inv1 == 0));
    out.line("beta satisfies inv2: " + yesNo(inv2 == 0));
    out.line("inva1/inva2/inva3: " + yesNo(inv.inva1) + "/" + yesNo(inv.inva2) + "/" + yesNo(inv.inva3));
    out.fact("beta.inv1", inv1 == 0);
    out.fact("beta.inv2", inv2 == 0);
    out.fact("beta.inva1", inv.inva1);
    out.fact("beta.inva2", inv.inva2);
    out.fact("beta.inva3", inv.inva3);

    out.line("alpha(IPS, B) = 0: " + yesNo(r.crossBlockVanishes));
    out.line("Killing form of L(B) nondegenerate: " + yesNo(r.alphaNondegenerate));
    out.line("alpha(D_xy, D_uv) = (-1)^{x(u+v+y)} beta(y,[u,v,x]): " + yesNo(r.innerIdentityHolds));
    out.fact("alpha.cross_block_zero", r.crossBlockVanishes);
    out.fact("alpha.nondegenerate", r.alphaNondegenerate);
    out.fact("alpha.inner_identity", r.innerIdentityHolds);

    emitSubspace(out, "center", "center", space, r.center);
    emitSubspace(out, "perp_of_span", "(B + [B,B,B])^perp", space, r.perpOfSpan);
    if (r.perpEqualsCenter) {
        out.line("(B + [B,B,B])^perp = center: " + yesNo(*r.perpEqualsCenter));
        out.fact("perp_of_span.equals_center", *r.perpEqualsCenter);
    }
    out.line("ideals and their orthogonals:");
    for (const auto& io : r.ideals) {
        const std::string cls(to_string(io.perpClass));
        out.line("  " + io.name + ": dim " + std::to_string(io.ideal.dim()) + ", perp dim " +
                 std::to_string(io.perp.dim()) + " (" + cls + ")");
        out.fact("ideal." + io.name + ".dim", io.ideal.dim());
        out.fact("ideal." + io.name + ".perp.dim", io.perp.dim());
        out.fact("ideal." + io.name + ".perp.class", cls);
    }
    return 0;
}

int dispatch(CLI::App& app, const Args& args, Output& out) {
    auto is = [&](const char* name) { return app.got_subcommand(name); };
    if (is("catalog")) {
        CLI::App* cat = app.get_subcommand("catalog");
        if (cat->got_subcommand("list")) {
            for (const auto& key : catalogKeys()) {
                if (key == "abelian_m_n") {
                    out.line("abelian_m_n  bol  abelian superalgebra with m even and n odd basis vectors");
                    out.fact("catalog.abelian_m_n.kind", std::string("bol"));
                    continue;
                }
                const CatalogEntry e = catalogEntry(key);
                const std::string k(to_string(e.kind));
                out.line(e.key + "  " + k + "  " + e.provenance);
                out.fact("catalog." + e.key + ".kind", k);
                out.fact("catalog." + e.key + ".provenance", e.provenance);
            }
            return 0;
        }
        const CatalogEntry e = catalogEntry(args.key);
        out.raw("# " + e.provenance + "\n# kind " + std::string(to_string(e.kind)) + "\n" + serializeAlgebra(e.algebra));
        return 0;
    }

    const AlgebraDef a = load(args.file);
    if (is("check")) {
        const AxiomKind kind = *parseAxiomKind(args.kind);
        const CheckReport r = checkAxioms(a, kind);
        emitCheck(out, a, kind, r);
        return r.passed() ? 0 : 1;
    }
    if (is("derive-bol")) {
        if (!requireKind(out, a, AxiomKind::Malcev)) return 1;
        writeOrPrint(out, args.output, malcevToBol(a));
        return 0;
    }
    if (is("lie-to-lts")) {
        if (!requireKind(out, a, AxiomKind::Lie)) return 1;
        writeOrPrint(out, args.output, lieToSupertriple(a));
        return 0;
    }
    if (is("envelope")) return cmdEnvelope(out, a, args.maximal);
    if (is("killing")) {
        if (!requireKind(out, a, AxiomKind::Lie)) return 1;
        out.fact("algebra", a.name());
        emitForm(out, "killing", "Killing form of " + a.name(), killingForm(a));
        return 0;
    }
    if (is("killing-ricci")) return cmdKillingRicci(out, a, args.method);
    if (is("center")) {
        out.fact("algebra", a.name());
        emitSubspace(out, "center", "center of " + a.name(), a.space(), center(a));
        return 0;
    }
    if (is("pseudo")) return cmdPseudo(out, a, args.max);
    if (is("report")) return cmdReport(out, a);
    throw Error(ErrorKind::Internal, "unhandled subcommand");
}

}  // namespace

CommandResult runCommand(const std::vector<std::string>& argv) {
    Args args;
    CLI::App app{"Workbench for graded Lie, Malcev, supertriple and Bol superalgebras over the rationals", "bolsuper"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", args.format, "Output style")->check(CLI::IsMember({"human", "machine"}));

    const auto fileArg = [&](CLI::App* sub) {
        sub->add_option("file", args.file, "Algebra file or catalog key")->required();
        return sub;
    };
    CLI::App* check = fileArg(app.add_subcommand("check", "Check the axioms of an algebra kind"));
    check->add_option("--kind", args.kind, "Axiom kind")
        ->required()
        ->check(CLI::IsMember({"lie", "malcev", "supertriple", "lts", "bol"}));
    fileArg(app.add_subcommand("derive-bol", "Bol superalgebra of a Malcev superalgebra"))
        ->add_option("-o,--output", args.output, "Write the result here");
    fileArg(app.add_subcommand("lie-to-lts", "Lie supertriple system of a Lie superalgebra"))
        ->add_option("-o,--output", args.output, "Write the result here");
    fileArg(app.add_subcommand("envelope", "Enveloping Lie superalgebra of a Bol superalgebra"))
        ->add_flag("--maximal", args.maximal, "Use all pseudo superderivations instead of the inner ones");
    fileArg(app.add_subcommand("killing", "Killing form of a Lie superalgebra"));
    fileArg(app.add_subcommand("killing-ricci", "Killing-Ricci form of a Bol superalgebra"))
        ->add_option("--method", args.method, "Computation route")
        ->check(CLI::IsMember({"direct", "restriction", "both"}));
    fileArg(app.add_subcommand("center", "Center of an algebra"));
    CLI::App* pseudo = fileArg(app.add_subcommand("pseudo", "Inner or all pseudo superderivations"));
    auto* inner = pseudo->add_flag("--inner", args.inner, "Inner pairs (default)");
    pseudo->add_flag("--max", args.max, "All pairs")->excludes(inner);
    fileArg(app.add_subcommand("report", "Killing-Ricci and semisimplicity report"));
    CLI::App* cat = app.add_subcommand("catalog", "Built-in algebras");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "List catalog keys");
    cat->add_subcommand("show", "Print a catalog entry")->add_option("key", args.key, "Catalog key")->required();

    CommandResult result;
    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.exitCode = code == 0 ? 0 : 2;
        return result;
    }

    Output output(args.format == "machine");
    try {
        result.exitCode = dispatch(app, args, output);
        result.out = output.str();
    } catch (const Error& e) {
        result.out = output.str();
        result.err = "error: " + std::string(e.what()) + "\n";
        result.exitCode = e.kind() == ErrorKind::Internal ? 3 : 2;
    } catch (const std::exception& e) {
        result.out = output.str();
        result.err = "internal error: " + std::string(e.what()) + "\n";
        result.exitCode = 3;
    }
    return result;
}

}  // namespace bolsuper
