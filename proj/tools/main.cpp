// Command-line front end: parses spec files, dispatches to the library,
// emits text or JSON reports.  No domain logic lives here.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 inconsistent
// experiment verdict, 4 malformed JSON, 5 schema violation,
// 6 inadmissible expansion data.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cobhamlab/json_io.hpp"
#include "cobhamlab/recognizers.hpp"
#include "cobhamlab/returns.hpp"
#include "cobhamlab/spectra.hpp"

using namespace cobhamlab;
using nlohmann::json;

namespace {

struct Options {
    bool as_json = false;
    std::string out_path;
    size_t window = 10000;
    unsigned long max_exp = 12;
    std::string eig_width = "1e-12";
};

Options opts;
int exit_code = 0;

void emit(const json& payload, const std::string& text) {
    std::string body = opts.as_json ? payload.dump(2) + "\n" : text;
    if (opts.out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(opts.out_path);
        if (!f) throw DomainError("cannot open output file " + opts.out_path);
        f << body;
    }
}

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot read " + path);
    return json::parse(f);
}

Substitution load_substitution(const std::string& path, bool must_validate = true) {
    Substitution s = substitution_from_json(load_json(path));
    if (must_validate) {
        ValidationReport r = validate(s);
        if (!r.ok) {
            std::string msg = path + ": substitution fails validation:";
            for (const auto& issue : r.issues) msg += "\n  - " + issue;
            throw SchemaError(msg);
        }
    }
    return s;
}

ParryData load_parry(const std::string& path) { return parry_from_json(load_json(path)); }

// System specs: "base:K", "parry:FILE", or a system JSON file path.
NumerationSystem parse_system(const std::string& spec) {
    if (spec.rfind("base:", 0) == 0)
        return NumerationSystem::base(std::stoul(spec.substr(5)));
    if (spec.rfind("parry:", 0) == 0)
        return bertrand_system_from_parry(load_parry(spec.substr(6)));
    return system_from_json(load_json(spec));
}

// Inline set shorthands "ap:m:r", "finite:1,2,3", else a set-spec file.
IntegerSetSpec parse_set(const std::string& spec, const NumerationSystem* dfa_system) {
    if (spec.rfind("ap:", 0) == 0) {
        size_t colon = spec.find(':', 3);
        if (colon == std::string::npos) throw SchemaError("set shorthand: expected ap:m:r");
        unsigned long m = std::stoul(spec.substr(3, colon - 3));
        unsigned long r = std::stoul(spec.substr(colon + 1));
        return IntegerSetSpec::ap_union({{APTerm{m, r}}, {}, {}});
    }
    if (spec.rfind("finite:", 0) == 0) {
        IntegerSetSpec::Finite f;
        std::stringstream ss(spec.substr(7));
        std::string item;
        while (std::getline(ss, item, ',')) f.values.push_back(std::stoul(item));
        return IntegerSetSpec::finite(std::move(f));
    }
    return set_spec_from_json(load_json(spec), dfa_system);
}

// Eigenvalue sources for the dependence command: "poly:...", "int:K",
// "matrix:FILE", "subst:FILE".
AlgebraicInterval parse_eigenvalue(const std::string& spec) {
    if (spec.rfind("poly:", 0) == 0)
        return AlgebraicInterval::largest_real_root(IntPoly::parse(spec.substr(5)));
    if (spec.rfind("int:", 0) == 0) return AlgebraicInterval::exact(Rat(Int(spec.substr(4))));
    if (spec.rfind("matrix:", 0) == 0)
        return dominant_eigenvalue(matrix_from_json(load_json(spec.substr(7))));
    if (spec.rfind("subst:", 0) == 0)
        return dominant_eigenvalue(load_substitution(spec.substr(6)).incidence_matrix());
    throw SchemaError("eigenvalue spec: expected poly:, int:, matrix: or subst:");
}

Rat parse_width(const std::string& text) {
    // Accept "1e-12" style or plain rationals "1/1000".
    if (text.find('e') != std::string::npos || text.find('E') != std::string::npos) {
        size_t e = text.find_first_of("eE");
        long mant = std::stol(text.substr(0, e));
        long exp = std::stol(text.substr(e + 1));
        if (exp >= 0) return Rat(mant) * Rat(int_pow(10, static_cast<unsigned long>(exp)));
        return Rat(mant) / Rat(int_pow(10, static_cast<unsigned long>(-exp)));
    }
    size_t slash = text.find('/');
    if (slash == std::string::npos) return Rat(Int(text));
    return Rat(Int(text.substr(0, slash))) / Rat(Int(text.substr(slash + 1)));
}

Word parse_digit_word(const std::string& digits) {
    std::vector<Letter> letters;
    for (char c : digits) {
        if (c < '0' || c > '9') throw SchemaError("digit words use characters 0-9");
        letters.push_back(c - '0');
    }
    return Word(std::move(letters));
}

// Fixed-point prefixes memoized under COBHAMLAB_CACHE_DIR, keyed by the
// canonical substitution JSON.
Word cached_prefix(const Substitution& s, size_t length) {
    const char* dir = std::getenv("COBHAMLAB_CACHE_DIR");
    if (!dir || !*dir) return s.fixed_point().prefix(length);
    std::string canon = substitution_to_json(s).dump();
    uint64_t h = 1469598103934665603ULL;
    for (char c : canon) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    std::filesystem::path path =
        std::filesystem::path(dir) / ("prefix-" + std::to_string(h) + ".txt");
    std::vector<Letter> cached;
    if (std::ifstream f{path}; f) {
        int a;
        while (f >> a) cached.push_back(a);
    }
    if (cached.size() >= length)
        return Word(
            std::vector<Letter>(cached.begin(), cached.begin() + static_cast<long>(length)));
    Word p = s.fixed_point().prefix(length);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (std::ofstream f{path}; f) {
        for (Letter a : p) f << a << '\n';
    }
    return p;
}

json validation_to_json(const ValidationReport& r) {
    return json{{"ok", r.ok}, {"issues", r.issues}};
}

json table_to_json(const ReturnWordTable& t) {
    json words = json::array();
    for (size_t k = 0; k < t.size(); ++k)
        words.push_back(t.word(static_cast<Letter>(k)).str(t.source_alphabet()));
    return json{{"base", t.base().str(t.source_alphabet())}, {"returns", std::move(words)}};
}

std::string matrix_text(const IntMatrix& m) {
    std::ostringstream out;
    for (size_t i = 0; i < m.size(); ++i) {
        for (size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << m.at(i, j).get_str();
        out << "\n";
    }
    return out.str();
}

std::string cobham_text(const CobhamReport& r) {
    std::ostringstream out;
    out << "alpha: " << r.alpha.str() << "\n";
    out << "beta:  " << r.beta.str() << "\n";
    out << "dependence: ";
    switch (r.dependence.status) {
        case DependenceStatus::Dependent:
            out << "dependent, alpha^" << r.dependence.exponents->first << " = beta^"
                << r.dependence.exponents->second;
            break;
        case DependenceStatus::Independent: out << "independent (certified)"; break;
        case DependenceStatus::IndependentUpToBound:
            out << "independent up to exponent " << r.dependence.searched_up_to;
            break;
    }
    out << "\n";
    out << "evidence in U: " << r.evidence_u.detail << "\n";
    out << "evidence in V: " << r.evidence_v.detail << "\n";
    if (r.periodicity)
        out << "periodicity: preperiod " << r.periodicity->preperiod << ", period "
            << r.periodicity->period << " (window " << r.periodicity->confirmed_up_to << ")\n";
    else
        out << "periodicity: none detected within the window\n";
    out << "power index: " << r.power_index << "\n";
    out << "max gap: " << r.gaps.max_gap << (r.gaps.growing_suspicion ? " (growing)" : "")
        << "\n";
    out << "verdict: " << verdict_name(r.verdict) << " -- " << r.verdict_reason << "\n";
    return out.str();
}

void cmd_subst(CLI::App* root) {
    auto* subst = root->add_subcommand("subst", "substitutions and their fixed points");

    static std::string file;
    static size_t length = 64;
    static size_t block_n = 2;
    static std::string target;
    static std::string prefix_digits = "0";

    auto* expand = subst->add_subcommand("expand", "expand the fixed point");
    expand->add_option("file", file, "substitution JSON")->required();
    expand->add_option("--length", length, "prefix length");
    expand->callback([] {
        Substitution s = load_substitution(file);
        Word p = cached_prefix(s, length);
        emit(json{{"prefix", p.str(s.alphabet())}}, p.str(s.alphabet()) + "\n");
    });

    auto* matrix = subst->add_subcommand("matrix", "incidence matrix");
    matrix->add_option("file", file)->required();
    matrix->callback([] {
        Substitution s = load_substitution(file, false);
        IntMatrix m = s.incidence_matrix();
        emit(matrix_to_json(m), matrix_text(m));
    });

    auto* check = subst->add_subcommand("validate", "check the substitution conditions");
    check->add_option("file", file)->required();
    check->callback([] {
        Substitution s = load_substitution(file, false);
        ValidationReport r = validate(s);
        std::ostringstream text;
        text << (r.ok ? "valid substitution\n" : "invalid substitution:\n");
        for (const auto& issue : r.issues) text << "  - " << issue << "\n";
        emit(validation_to_json(r), text.str());
        if (!r.ok) exit_code = 1;
    });

    auto* prim = subst->add_subcommand("primitive", "primitivity and dominant eigenvalue");
    prim->add_option("file", file)->required();
    prim->callback([] {
        Substitution s = load_substitution(file);
        bool p = is_primitive(s.incidence_matrix());
        AlgebraicInterval ev = dominant_eigenvalue(s.incidence_matrix(), parse_width(opts.eig_width));
        emit(json{{"primitive", p}, {"eigenvalue", interval_to_json(ev)}},
             std::string(p ? "primitive" : "not primitive") + ", dominant eigenvalue " +
                 ev.str() + "\n");
    });

    auto* decompose = subst->add_subcommand("decompose", "primitive components and normal form");
    decompose->add_option("file", file)->required();
    decompose->callback([] {
        Substitution s = load_substitution(file);
        ConditionCPower c = condition_C_power(s, 16);
        std::vector<SubSubstitution> subs = sub_substitutions(s.power(c.k));
        json subs_j = json::array();
        std::ostringstream text;
        text << "normal form reached at power " << c.k << "\n";
        for (const SubSubstitution& sub : subs) {
            subs_j.push_back(json{{"principal", sub.principal},
                                  {"start", s.alphabet().name(sub.start_parent)},
                                  {"substitution", substitution_to_json(sub.restriction)}});
            text << (sub.principal ? "principal" : "non-principal") << " component, start "
                 << s.alphabet().name(sub.start_parent) << "\n";
        }
        emit(json{{"k", c.k},
                  {"decomposition", decomposition_to_json(c.decomposition, s.alphabet())},
                  {"sub_substitutions", std::move(subs_j)}},
             text.str());
    });

    auto* blocks = subst->add_subcommand("blocks", "sliding-block substitution");
    blocks->add_option("file", file)->required();
    blocks->add_option("--n", block_n, "block length");
    blocks->callback([] {
        Substitution s = load_substitution(file);
        BlockSubstitutionResult b = block_substitution(s, block_n);
        emit(json{{"substitution", substitution_to_json(b.subst)}},
             substitution_to_json(b.subst).dump(2) + "\n");
    });

    auto* project = subst->add_subcommand("project", "find a letter-to-letter projection");
    project->add_option("file", file, "source substitution")->required();
    project->add_option("--onto", target, "target substitution")->required();
    project->callback([] {
        Substitution s = load_substitution(file);
        Substitution t = load_substitution(target);
        auto witness = projects_onto(s, t);
        if (!witness) {
            emit(json{{"found", false}}, "no projection\n");
            return;
        }
        json map = json::object();
        std::ostringstream text;
        text << "projection found:\n";
        for (Letter c = 0; c < s.alphabet().size(); ++c) {
            map[s.alphabet().name(c)] = t.alphabet().name(witness->map.rule(c)[0]);
            text << "  " << s.alphabet().name(c) << " -> "
                 << t.alphabet().name(witness->map.rule(c)[0]) << "\n";
        }
        emit(json{{"found", true}, {"map", std::move(map)}}, text.str());
    });

    auto* derive = subst->add_subcommand("derive", "derived substitution by a prefix");
    derive->add_option("file", file)->required();
    derive->add_option("--prefix", prefix_digits, "prefix as digit word over letter ids");
    derive->callback([] {
        Substitution s = load_substitution(file);
        Substitution d = derived_substitution(s, parse_digit_word(prefix_digits));
        emit(substitution_to_json(d), substitution_to_json(d).dump(2) + "\n");
    });
}

void cmd_spectra(CLI::App* root) {
    auto* spectra = root->add_subcommand("spectra", "exact spectral analysis");

    static std::string matrix_file, a_spec, b_spec;

    auto* charpoly = spectra->add_subcommand("charpoly", "characteristic polynomial");
    charpoly->add_option("file", matrix_file, "matrix JSON")->required();
    charpoly->callback([] {
        IntPoly p = char_poly(matrix_from_json(load_json(matrix_file)));
        emit(json{{"poly", p.str()}}, p.str() + "\n");
    });

    auto* eig = spectra->add_subcommand("eig", "dominant eigenvalue");
    eig->add_option("file", matrix_file, "matrix JSON")->required();
    eig->callback([] {
        AlgebraicInterval ev =
            dominant_eigenvalue(matrix_from_json(load_json(matrix_file)), parse_width(opts.eig_width));
        emit(interval_to_json(ev), ev.str() + "\n");
    });

    auto* depend = spectra->add_subcommand("depend", "multiplicative dependence");
    depend->add_option("--a", a_spec, "poly:..., int:K, matrix:FILE or subst:FILE")->required();
    depend->add_option("--b", b_spec, "poly:..., int:K, matrix:FILE or subst:FILE")->required();
    depend->add_option("--max", opts.max_exp, "bound for the dependence search");
    depend->callback([] {
        DependenceResult d =
            multiplicatively_dependent(parse_eigenvalue(a_spec), parse_eigenvalue(b_spec), opts.max_exp);
        std::ostringstream text;
        if (d.dependent())
            text << "dependent: (" << d.exponents->first << ", " << d.exponents->second << ")\n";
        else if (d.status == DependenceStatus::Independent)
            text << "independent (certified)\n";
        else
            text << "independent up to exponent " << d.searched_up_to << "\n";
        emit(dependence_to_json(d), text.str());
    });
}

void cmd_returns(CLI::App* root) {
    auto* returns = root->add_subcommand("returns", "return words and derived sequences");

    static std::string file;
    static std::string factor = "0";
    static size_t count = 8;
    static size_t max_prefixes = 8;
    static size_t length = 64;

    auto* table = returns->add_subcommand("table", "return words of a factor");
    table->add_option("file", file, "substitution JSON")->required();
    table->add_option("--factor", factor, "factor as a digit word over letter ids");
    table->callback([] {
        Substitution s = load_substitution(file);
        ReturnWordTable t = return_words(s.fixed_point(), parse_digit_word(factor));
        std::ostringstream text;
        for (size_t k = 0; k < t.size(); ++k)
            text << (k + 1) << " -> " << t.word(static_cast<Letter>(k)).str(t.source_alphabet())
                 << "\n";
        emit(table_to_json(t), text.str());
    });

    auto* derive = returns->add_subcommand("derive", "derived sequence by a prefix");
    derive->add_option("file", file)->required();
    derive->add_option("--prefix", factor, "prefix as a digit word over letter ids");
    derive->add_option("--length", length, "derived prefix length to print");
    derive->callback([] {
        Substitution s = load_substitution(file);
        DerivedSequence d = derived_sequence(s.fixed_point(), parse_digit_word(factor));
        Word p = d.seq.prefix(length);
        emit(json{{"table", table_to_json(d.table)},
                  {"derived_prefix", p.str(d.seq.alphabet())}},
             p.str(d.seq.alphabet()) + "\n");
    });

    auto* detect = returns->add_subcommand("detect", "detect primitive substitutive structure");
    detect->add_option("file", file)->required();
    detect->add_option("--max-prefixes", max_prefixes);
    detect->callback([] {
        Substitution s = load_substitution(file);
        auto found = detect_primitive_substitutive(s.fixed_point(), max_prefixes);
        if (!found) {
            emit(json{{"found", false}}, "inconclusive\n");
            return;
        }
        emit(json{{"found", true},
                  {"substitution", substitution_to_json(found->sigma)},
                  {"prefixes_inspected", found->prefixes_inspected}},
             "found after " + std::to_string(found->prefixes_inspected) + " prefixes\n" +
                 substitution_to_json(found->sigma).dump(2) + "\n");
    });

    auto* linrec = returns->add_subcommand("linrec", "return-word survey constants");
    linrec->add_option("file", file)->required();
    linrec->add_option("--prefixes", count, "number of prefixes to sample");
    linrec->callback([] {
        Substitution s = load_substitution(file);
        LinRecReport r = linrec_survey(s, count);
        std::ostringstream text;
        text << "K = " << r.K.get_str() << " (" << decimal_string(r.K, 4) << ")\n";
        for (const LinRecSample& sample : r.samples)
            text << "|u|=" << sample.prefix_length << "  returns in [" << sample.min_return
                 << ", " << sample.max_return << "]  card " << sample.cardinality << "\n";
        emit(linrec_to_json(r), text.str());
    });
}

void cmd_num(CLI::App* root) {
    auto* num = root->add_subcommand("num", "numeration systems and expansions");

    static std::string system_spec = "base:2";
    static std::string parry_file;
    static std::string x_text = "1";
    static std::string digits_text;
    static size_t count = 10;
    static unsigned long value = 0;
    static size_t max_order = 8;

    auto* build = num->add_subcommand("build", "materialize scale values");
    build->add_option("--system", system_spec, "base:K, parry:FILE or system JSON file");
    build->add_option("--count", count);
    build->callback([] {
        NumerationSystem u = parse_system(system_spec);
        json values = json::array();
        std::ostringstream text;
        for (size_t i = 0; i < count; ++i) {
            values.push_back(u.value(i).get_str());
            text << (i ? " " : "") << u.value(i).get_str();
        }
        text << "\n";
        emit(json{{"values", std::move(values)}, {"digits", u.digit_count()}}, text.str());
    });

    auto* repr = num->add_subcommand("repr", "greedy representation");
    repr->add_option("--system", system_spec);
    repr->add_option("--x", value)->required();
    repr->callback([] {
        NumerationSystem u = parse_system(system_spec);
        Word w = greedy_representation(Int(static_cast<long>(value)), u);
        emit(json{{"digits", w.str(u.digit_alphabet())}}, w.str(u.digit_alphabet()) + "\n");
    });

    auto* val = num->add_subcommand("value", "value of a digit word");
    val->add_option("--system", system_spec);
    val->add_option("--digits", digits_text)->required();
    val->callback([] {
        NumerationSystem u = parse_system(system_spec);
        Int x = digits_value(parse_digit_word(digits_text), u);
        emit(json{{"value", x.get_str()}}, x.get_str() + "\n");
    });

    auto* member = num->add_subcommand("member", "greedy admissibility of a digit word");
    member->add_option("--system", system_spec);
    member->add_option("--digits", digits_text)->required();
    member->callback([] {
        NumerationSystem u = parse_system(system_spec);
        Word w = parse_digit_word(digits_text);
        bool ok = is_greedy_word(w, u);
        std::string note;
        for (Letter d : w)
            if (static_cast<size_t>(d) >= u.digit_count())
                note = " (digit " + std::to_string(d) + " is outside the alphabet)";
        emit(json{{"member", ok}, {"note", note}},
             std::string(ok ? "true" : "false") + note + "\n");
    });

    auto* recur = num->add_subcommand("recur", "detect a linear recurrence");
    recur->add_option("--system", system_spec);
    recur->add_option("--max-order", max_order);
    recur->callback([] {
        NumerationSystem u = parse_system(system_spec);
        auto fit = detect_linear_recurrence(u, max_order, 2 * max_order + 8);
        if (!fit) {
            emit(json{{"found", false}}, "no recurrence up to the order bound\n");
            return;
        }
        json coeffs = json::array();
        std::ostringstream text;
        text << "coefficients:";
        for (const Int& d : fit->coefficients) {
            coeffs.push_back(d.get_str());
            text << " " << d.get_str();
        }
        text << "\npolynomial: " << fit->characteristic.str() << "\n";
        emit(json{{"found", true},
                  {"coefficients", std::move(coeffs)},
                  {"poly", fit->characteristic.str()}},
             text.str());
    });

    auto* beta = num->add_subcommand("beta", "exact expansion digits in base alpha");
    beta->add_option("--parry", parry_file, "expansion data of 1")->required();
    beta->add_option("--x", x_text, "rational in [0,1], e.g. 1 or 1/2");
    beta->add_option("--count", count);
    beta->callback([] {
        BetaNumber alpha = BetaNumber::from_parry(load_parry(parry_file));
        Rat x = parse_width(x_text);
        auto digits = beta_expansion(RatPoly(std::vector<Rat>{x}), alpha, count);
        std::ostringstream text;
        for (size_t i = 0; i < digits.size(); ++i) text << (i ? "," : "") << digits[i];
        text << "\n";
        emit(json{{"digits", digits}}, text.str());
    });

    auto* omega = num->add_subcommand("omega", "canonical substitution of a beta-number");
    omega->add_option("--parry", parry_file)->required();
    omega->callback([] {
        Substitution s = omega_substitution(load_parry(parry_file));
        emit(substitution_to_json(s), substitution_to_json(s).dump(2) + "\n");
    });
}

void cmd_dfa(CLI::App* root) {
    auto* dfa = root->add_subcommand("dfa", "digit automata over numeration systems");

    static std::string system_spec = "base:2";
    static std::string a_file, b_file, values_text, op_name = "union", order_name = "msd";
    static unsigned long modulus = 2, residue = 0, member_x = 0;

    auto* ap = dfa->add_subcommand("ap", "arithmetic-progression recognizer");
    ap->add_option("--system", system_spec);
    ap->add_option("--modulus", modulus)->required();
    ap->add_option("--residue", residue);
    ap->add_option("--order", order_name, "msd or lsd");
    ap->callback([] {
        NumerationSystem u = parse_system(system_spec);
        ReadingOrder order = order_name == "lsd" ? ReadingOrder::LeastSignificantFirst
                                                 : ReadingOrder::MostSignificantFirst;
        DigitDFA d = ap_recognizer(modulus, residue, u, order);
        emit(dfa_to_json(d), dfa_to_json(d).dump(2) + "\n");
    });

    auto* fin = dfa->add_subcommand("finite", "finite-set recognizer");
    fin->add_option("--system", system_spec);
    fin->add_option("--values", values_text, "comma-separated naturals")->required();
    fin->callback([] {
        NumerationSystem u = parse_system(system_spec);
        std::vector<Int> values;
        std::stringstream ss(values_text);
        std::string item;
        while (std::getline(ss, item, ',')) values.emplace_back(item);
        DigitDFA d = finite_set_recognizer(values, u);
        emit(dfa_to_json(d), dfa_to_json(d).dump(2) + "\n");
    });

    auto* boolean = dfa->add_subcommand("bool", "boolean combination of two automata");
    boolean->add_option("--op", op_name, "union, intersection or difference");
    boolean->add_option("--a", a_file)->required();
    boolean->add_option("--b", b_file)->required();
    boolean->callback([] {
        SetOp op = op_name == "union"          ? SetOp::Union
                   : op_name == "intersection" ? SetOp::Intersection
                   : op_name == "difference"   ? SetOp::Difference
                                               : throw SchemaError("unknown boolean op");
        DigitDFA d = dfa_boolean(op, dfa_from_json(load_json(a_file)),
                                 dfa_from_json(load_json(b_file)));
        emit(dfa_to_json(d), dfa_to_json(d).dump(2) + "\n");
    });

    auto* rev = dfa->add_subcommand("reverse", "automaton of the reversed language");
    rev->add_option("--a", a_file)->required();
    rev->callback([] {
        DigitDFA d = reverse_determinize(dfa_from_json(load_json(a_file)));
        emit(dfa_to_json(d), dfa_to_json(d).dump(2) + "\n");
    });

    auto* member = dfa->add_subcommand("member", "membership of an integer");
    member->add_option("--a", a_file)->required();
    member->add_option("--system", system_spec);
    member->add_option("--x", member_x)->required();
    member->callback([] {
        NumerationSystem u = parse_system(system_spec);
        bool ok = run_membership(dfa_from_json(load_json(a_file)),
                                 Int(static_cast<long>(member_x)), u);
        emit(json{{"member", ok}}, std::string(ok ? "true" : "false") + "\n");
    });
}

void cmd_cobham(CLI::App* root) {
    auto* cobham = root->add_subcommand("cobham", "the recognizability experiment");

    static std::string set_spec, u_file, v_file;

    auto* run = cobham->add_subcommand("run", "run the experiment on a set and two systems");
    run->add_option("--set", set_spec, "ap:m:r, finite:..., or a set-spec JSON file")->required();
    run->add_option("--u", u_file, "expansion data of the first system")->required();
    run->add_option("--v", v_file, "expansion data of the second system")->required();
    run->callback([] {
        ParryData pu = load_parry(u_file);
        ParryData pv = load_parry(v_file);
        NumerationSystem u = bertrand_system_from_parry(pu);
        IntegerSetSpec set = parse_set(set_spec, &u);
        CobhamParams params;
        params.window = opts.window;
        params.max_exp = opts.max_exp;
        CobhamReport r = cobham_experiment(set, pu, pv, params);
        // The JSON report echoes its inputs so any verdict, and an
        // inconsistent one in particular, can be reproduced verbatim.
        json bundle{{"inputs", json{{"set", set_spec_to_json(set)},
                                    {"u", parry_to_json(pu)},
                                    {"v", parry_to_json(pv)},
                                    {"window", params.window},
                                    {"max_exp", params.max_exp}}},
                    {"report", cobham_report_to_json(r)}};
        emit(bundle, cobham_text(r));
        if (r.verdict == Verdict::Inconsistent) exit_code = 3;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolkit for substitutions, return words, non-standard numeration "
                 "systems, and recognizable integer sets"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opts.as_json, "emit JSON instead of text");
    app.add_option("--out", opts.out_path, "write the report to a file");
    app.add_option("--window", opts.window, "window size for sequence scans");
    app.add_option("--max-exp", opts.max_exp, "bound for the dependence search");
    app.add_option("--eig-width", opts.eig_width, "eigenvalue interval width");

    cmd_subst(&app);
    cmd_spectra(&app);
    cmd_returns(&app);
    cmd_num(&app);
    cmd_dfa(&app);
    cmd_cobham(&app);

    auto all = [](CLI::App*) { return true; };
    for (CLI::App* sub : app.get_subcommands(all)) {
        sub->require_subcommand(1);
        sub->fallthrough();
        for (CLI::App* leaf : sub->get_subcommands(all)) leaf->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const json::parse_error& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return 4;
    } catch (const InadmissibleParryError& e) {
        std::cerr << "inadmissible expansion data: " << e.what() << "\n";
        return 6;
    } catch (const SchemaError& e) {
        std::cerr << "schema violation: " << e.what() << "\n";
        return 5;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
