#include "cobhamlab/json_io.hpp"

#include <algorithm>

namespace cobhamlab {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + "/" + key + ": missing");
    return *it;
}

Word parse_word(const json& j, const Alphabet& alphabet, const std::string& where) {
    Word out;
    bool single_char = true;
    for (int a = 0; a < alphabet.size(); ++a)
        if (alphabet.name(a).size() != 1) single_char = false;
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (single_char) {
            for (char c : s) {
                auto id = alphabet.find(std::string(1, c));
                if (!id) throw SchemaError(where + ": unknown letter '" + std::string(1, c) + "'");
                out.push_back(*id);
            }
            return out;
        }
        throw SchemaError(where + ": string rules need single-character letter names; "
                                  "use an array of names instead");
    }
    if (!j.is_array()) throw SchemaError(where + ": expected a string or array of letter names");
    for (size_t i = 0; i < j.size(); ++i) {
        const json& e = j[i];
        if (!e.is_string())
            throw SchemaError(where + "/" + std::to_string(i) + ": expected a letter name");
        auto id = alphabet.find(e.get<std::string>());
        if (!id)
            throw SchemaError(where + "/" + std::to_string(i) + ": unknown letter '" +
                              e.get<std::string>() + "'");
        out.push_back(*id);
    }
    return out;
}

}  // namespace

Substitution substitution_from_json(const json& j) {
    const json& alphabet_j = need(j, "alphabet", "");
    if (!alphabet_j.is_array() || alphabet_j.empty())
        throw SchemaError("/alphabet: expected a non-empty array of letter names");
    std::vector<std::string> names;
    for (size_t i = 0; i < alphabet_j.size(); ++i) {
        if (!alphabet_j[i].is_string())
            throw SchemaError("/alphabet/" + std::to_string(i) + ": expected a string");
        names.push_back(alphabet_j[i].get<std::string>());
    }
    Alphabet alphabet(names);
    const json& rules_j = need(j, "rules", "");
    if (!rules_j.is_object()) throw SchemaError("/rules: expected an object");
    std::vector<Word> rules(names.size());
    std::vector<bool> have(names.size(), false);
    for (auto it = rules_j.begin(); it != rules_j.end(); ++it) {
        auto id = alphabet.find(it.key());
        if (!id) throw SchemaError("/rules/" + it.key() + ": not a letter of the alphabet");
        rules[static_cast<size_t>(*id)] = parse_word(it.value(), alphabet, "/rules/" + it.key());
        have[static_cast<size_t>(*id)] = true;
    }
    for (size_t i = 0; i < names.size(); ++i)
        if (!have[i]) throw SchemaError("/rules: missing image for letter '" + names[i] + "'");
    const json& start_j = need(j, "start", "");
    if (!start_j.is_string()) throw SchemaError("/start: expected a letter name");
    auto start = alphabet.find(start_j.get<std::string>());
    if (!start) throw SchemaError("/start: not a letter of the alphabet");
    return Substitution(alphabet, std::move(rules), *start);
}

json substitution_to_json(const Substitution& s) {
    json out;
    json alphabet = json::array();
    for (int a = 0; a < s.alphabet().size(); ++a) alphabet.push_back(s.alphabet().name(a));
    out["alphabet"] = std::move(alphabet);
    json rules = json::object();
    bool single_char = true;
    for (int a = 0; a < s.alphabet().size(); ++a)
        if (s.alphabet().name(a).size() != 1) single_char = false;
    for (int a = 0; a < s.alphabet().size(); ++a) {
        if (single_char) {
            rules[s.alphabet().name(a)] = s.rule(a).str(s.alphabet());
        } else {
            json w = json::array();
            for (Letter b : s.rule(a)) w.push_back(s.alphabet().name(b));
            rules[s.alphabet().name(a)] = std::move(w);
        }
    }
    out["rules"] = std::move(rules);
    out["start"] = s.alphabet().name(s.start());
    return out;
}

IntMatrix matrix_from_json(const json& j) {
    const json& size_j = need(j, "size", "");
    if (!size_j.is_number_unsigned()) throw SchemaError("/size: expected a non-negative integer");
    size_t n = size_j.get<size_t>();
    const json& rows = need(j, "rows", "");
    if (!rows.is_array() || rows.size() != n)
        throw SchemaError("/rows: expected " + std::to_string(n) + " rows");
    IntMatrix m(n);
    for (size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw SchemaError("/rows/" + std::to_string(i) + ": expected " + std::to_string(n) +
                              " entries");
        for (size_t k = 0; k < n; ++k) {
            const json& e = rows[i][k];
            if (e.is_number_unsigned())
                m.set(i, k, Int(e.get<unsigned long>()));
            else if (e.is_string())
                m.set(i, k, Int(e.get<std::string>()));
            else
                throw SchemaError("/rows/" + std::to_string(i) + "/" + std::to_string(k) +
                                  ": expected a non-negative integer");
        }
    }
    return m;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (size_t k = 0; k < m.size(); ++k) {
            const Int& v = m.at(i, k);
            if (v.fits_ulong_p())
                row.push_back(v.get_ui());
            else
                row.push_back(v.get_str());
        }
        rows.push_back(std::move(row));
    }
    return json{{"size", m.size()}, {"rows", std::move(rows)}};
}

ParryData parry_from_json(const json& j) {
    auto digits = [&](const char* key) {
        const json& arr = need(j, key, "");
        if (!arr.is_array()) throw SchemaError(std::string("/") + key + ": expected an array");
        std::vector<int> out;
        for (size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_number_integer() || arr[i].get<long>() < 0)
                throw SchemaError(std::string("/") + key + "/" + std::to_string(i) +
                                  ": expected a non-negative digit");
            out.push_back(arr[i].get<int>());
        }
        return out;
    };
    return ParryData(digits("preperiod"), digits("period"));
}

json parry_to_json(const ParryData& p) {
    return json{{"preperiod", p.preperiod()}, {"period", p.period()}};
}

NumerationSystem system_from_json(const json& j) {
    if (j.is_object() && j.contains("parry")) return bertrand_system_from_parry(parry_from_json(j["parry"]));
    if (j.is_object() && j.contains("recurrence")) {
        const json& rec = j["recurrence"];
        const json& init = need(j, "initial", "");
        if (!rec.is_array() || rec.empty())
            throw SchemaError("/recurrence: expected a non-empty array");
        if (!init.is_array() || init.size() != rec.size())
            throw SchemaError("/initial: expected as many values as recurrence coefficients");
        std::vector<Int> coeffs, initial;
        for (const json& e : rec) {
            if (!e.is_number_integer()) throw SchemaError("/recurrence: expected integers");
            coeffs.emplace_back(e.get<long>());
        }
        for (const json& e : init) {
            if (!e.is_number_unsigned()) throw SchemaError("/initial: expected naturals");
            initial.emplace_back(static_cast<long>(e.get<unsigned long>()));
        }
        return NumerationSystem::from_recurrence(std::move(coeffs), std::move(initial));
    }
    throw SchemaError(": system needs either {\"parry\": ...} or {\"recurrence\", \"initial\"}");
}

DigitDFA dfa_from_json(const json& j) {
    const json& alphabet = need(j, "alphabet", "");
    if (!alphabet.is_array() || alphabet.empty())
        throw SchemaError("/alphabet: expected a non-empty array of digits");
    size_t digits = alphabet.size();
    for (size_t i = 0; i < digits; ++i)
        if (!alphabet[i].is_number_unsigned() || alphabet[i].get<size_t>() != i)
            throw SchemaError("/alphabet: expected the digits 0..k-1 in order");
    const json& states_j = need(j, "states", "");
    if (!states_j.is_number_unsigned() || states_j.get<size_t>() == 0)
        throw SchemaError("/states: expected a positive count");
    size_t states = states_j.get<size_t>();
    const json& start_j = need(j, "start", "");
    if (!start_j.is_number_unsigned() || start_j.get<size_t>() >= states)
        throw SchemaError("/start: expected a state index");
    const json& order_j = need(j, "order", "");
    ReadingOrder order;
    if (order_j == "msd")
        order = ReadingOrder::MostSignificantFirst;
    else if (order_j == "lsd")
        order = ReadingOrder::LeastSignificantFirst;
    else
        throw SchemaError("/order: expected \"msd\" or \"lsd\"");
    const json& acc_j = need(j, "accepting", "");
    if (!acc_j.is_array()) throw SchemaError("/accepting: expected an array of state indices");
    std::vector<bool> acc(states, false);
    for (const json& e : acc_j) {
        if (!e.is_number_unsigned() || e.get<size_t>() >= states)
            throw SchemaError("/accepting: state index out of range");
        acc[e.get<size_t>()] = true;
    }
    const json& delta_j = need(j, "delta", "");
    if (!delta_j.is_array() || delta_j.size() != states)
        throw SchemaError("/delta: expected one row per state");
    std::vector<std::vector<uint32_t>> delta(states, std::vector<uint32_t>(digits));
    for (size_t q = 0; q < states; ++q) {
        if (!delta_j[q].is_array() || delta_j[q].size() != digits)
            throw SchemaError("/delta/" + std::to_string(q) + ": expected one entry per digit");
        for (size_t d = 0; d < digits; ++d) {
            const json& e = delta_j[q][d];
            if (!e.is_number_unsigned() || e.get<size_t>() >= states)
                throw SchemaError("/delta/" + std::to_string(q) + "/" + std::to_string(d) +
                                  ": state index out of range");
            delta[q][d] = e.get<uint32_t>();
        }
    }
    return DigitDFA(states, digits, start_j.get<size_t>(), std::move(delta), std::move(acc),
                    order);
}

json dfa_to_json(const DigitDFA& d) {
    json alphabet = json::array();
    for (size_t i = 0; i < d.alphabet_size(); ++i) alphabet.push_back(i);
    json accepting = json::array();
    for (size_t q = 0; q < d.state_count(); ++q)
        if (d.accepting(q)) accepting.push_back(q);
    json delta = json::array();
    for (size_t q = 0; q < d.state_count(); ++q) {
        json row = json::array();
        for (size_t digit = 0; digit < d.alphabet_size(); ++digit) row.push_back(d.next(q, digit));
        delta.push_back(std::move(row));
    }
    return json{{"alphabet", std::move(alphabet)},
                {"states", d.state_count()},
                {"start", d.start()},
                {"accepting", std::move(accepting)},
                {"order", d.order() == ReadingOrder::MostSignificantFirst ? "msd" : "lsd"},
                {"delta", std::move(delta)}};
}

IntegerSetSpec set_spec_from_json(const json& j, const NumerationSystem* dfa_system) {
    const json& kind = need(j, "kind", "");
    if (kind == "ap_union") {
        IntegerSetSpec::APUnion u;
        const json& aps = need(j, "aps", "");
        if (!aps.is_array()) throw SchemaError("/aps: expected an array of [modulus, residue]");
        for (size_t i = 0; i < aps.size(); ++i) {
            const json& t = aps[i];
            if (!t.is_array() || t.size() != 2 || !t[0].is_number_unsigned() ||
                !t[1].is_number_unsigned())
                throw SchemaError("/aps/" + std::to_string(i) + ": expected [modulus, residue]");
            u.terms.push_back(APTerm{t[0].get<unsigned long>(), t[1].get<unsigned long>()});
        }
        if (j.contains("add"))
            for (const json& e : j["add"]) u.add.push_back(e.get<unsigned long>());
        if (j.contains("remove"))
            for (const json& e : j["remove"]) u.remove.push_back(e.get<unsigned long>());
        return IntegerSetSpec::ap_union(std::move(u));
    }
    if (kind == "finite") {
        IntegerSetSpec::Finite f;
        const json& values = need(j, "values", "");
        if (!values.is_array()) throw SchemaError("/values: expected an array");
        for (const json& e : values) {
            if (!e.is_number_unsigned()) throw SchemaError("/values: expected naturals");
            f.values.push_back(e.get<unsigned long>());
        }
        return IntegerSetSpec::finite(std::move(f));
    }
    if (kind == "dfa") {
        DigitDFA d = dfa_from_json(need(j, "dfa", ""));
        if (j.contains("system"))
            return IntegerSetSpec::automaton({std::move(d), system_from_json(j["system"])});
        if (!dfa_system)
            throw SchemaError("/system: automaton set specs need a numeration system");
        return IntegerSetSpec::automaton({std::move(d), *dfa_system});
    }
    throw SchemaError("/kind: expected \"ap_union\", \"finite\" or \"dfa\"");
}

json set_spec_to_json(const IntegerSetSpec& s) {
    if (const IntegerSetSpec::APUnion* u = s.as_ap_union()) {
        json aps = json::array();
        for (const APTerm& t : u->terms) aps.push_back(json::array({t.modulus, t.residue}));
        return json{{"kind", "ap_union"}, {"aps", std::move(aps)}, {"add", u->add},
                    {"remove", u->remove}};
    }
    if (const IntegerSetSpec::Finite* f = s.as_finite())
        return json{{"kind", "finite"}, {"values", f->values}};
    return json{{"kind", "dfa"}, {"dfa", dfa_to_json(s.as_automaton()->dfa)}};
}

json decomposition_to_json(const PrimitiveDecomposition& d, const Alphabet& alphabet) {
    json partition = json::array();
    for (const auto& comp : d.partition) {
        json letters = json::array();
        for (Letter a : comp) letters.push_back(alphabet.name(a));
        partition.push_back(std::move(letters));
    }
    return json{{"p", d.p},
                {"q", d.q},
                {"partition", std::move(partition)},
                {"principal", d.principal}};
}

json interval_to_json(const AlgebraicInterval& a) {
    return json{{"poly", a.poly().str()},
                {"lo", a.lo().get_str()},
                {"hi", a.hi().get_str()},
                {"exact", a.is_exact()},
                {"decimal", decimal_string(a.midpoint(), 15)}};
}

json dependence_to_json(const DependenceResult& d) {
    json out;
    switch (d.status) {
        case DependenceStatus::Dependent: out["status"] = "dependent"; break;
        case DependenceStatus::Independent: out["status"] = "independent"; break;
        case DependenceStatus::IndependentUpToBound:
            out["status"] = "independent_up_to_bound";
            break;
    }
    out["searched_up_to"] = d.searched_up_to;
    if (d.exponents) out["exponents"] = json::array({d.exponents->first, d.exponents->second});
    return out;
}

json periodicity_to_json(const PeriodicityReport& p) {
    return json{{"preperiod", p.preperiod},
                {"period", p.period},
                {"confirmed_up_to", p.confirmed_up_to}};
}

json linrec_to_json(const LinRecReport& r) {
    json samples = json::array();
    for (const LinRecSample& s : r.samples)
        samples.push_back(json{{"prefix_length", s.prefix_length},
                               {"min_return", s.min_return},
                               {"max_return", s.max_return},
                               {"cardinality", s.cardinality}});
    return json{{"K", r.K.get_str()},
                {"K_decimal", decimal_string(r.K, 6)},
                {"samples", std::move(samples)}};
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Consistent: return "consistent";
        case Verdict::Inconsistent: return "inconsistent";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

json cobham_report_to_json(const CobhamReport& r) {
    auto evidence = [](const RecognizabilityEvidence& e) {
        json out{{"established", e.established}, {"detail", e.detail}};
        if (e.recognizer) out["recognizer"] = dfa_to_json(*e.recognizer);
        return out;
    };
    json out{{"alpha", interval_to_json(r.alpha)},
             {"beta", interval_to_json(r.beta)},
             {"dependence", dependence_to_json(r.dependence)},
             {"evidence_u", evidence(r.evidence_u)},
             {"evidence_v", evidence(r.evidence_v)},
             {"power_index", r.power_index},
             {"gaps", json{{"max_gap", r.gaps.max_gap},
                           {"members", r.gaps.members},
                           {"growing_suspicion", r.gaps.growing_suspicion},
                           {"indeterminate", r.gaps.indeterminate}}},
             {"verdict", verdict_name(r.verdict)},
             {"verdict_reason", r.verdict_reason}};
    if (r.periodicity)
        out["periodicity"] = periodicity_to_json(*r.periodicity);
    else
        out["periodicity"] = nullptr;
    return out;
}

}  // namespace cobhamlab
