#include "septic/report.hpp"

#include <json.hpp>
#include <sstream>

#include "septic/irreducible.hpp"

namespace septic {

using ordered_json = nlohmann::ordered_json;

std::vector<long> report_primes(const Trinomial& t) {
    std::vector<long> out = {2, 3, 5, 7};
    Int delta = t.discriminant();
    for (long p : primes_up_to(100)) {
        if (p <= 7) continue;
        if (padic_valuation(delta, p).value() >= 2) out.push_back(p);
    }
    return out;
}

ReportDocument build_report(const Trinomial& t, long scan_budget, unsigned long seed) {
    ReportDocument doc;
    doc.a = t.a;
    doc.b = t.b;
    doc.discriminant = t.discriminant();
    doc.irreducible = is_irreducible_over_Q(t.poly());
    if (!doc.irreducible) return doc;

    for (long p : report_primes(t)) {
        try {
            doc.primes.push_back(assemble_nu(t, p, scan_budget, seed));
        } catch (const InconsistencyDetected& e) {
            doc.discrepancies.push_back(e.what());
            NuEvidence ev;
            ev.p = p;
            ev.value = p == 2 ? nu2_index(t) : p == 3 ? nu3_index(t) : 0;
            doc.primes.push_back(ev);
        }
    }
    IndexReport idx = field_index(t);
    doc.field_index = idx.field_index;
    doc.monogenic_obstruction = idx.monogenic_obstruction;
    ClosednessVerdict closed = integral_closed(t);
    doc.integrally_closed = closed.closed;
    doc.closedness_certified = closed.certified;
    for (auto& n : closed.notes) doc.discrepancies.push_back(n);
    return doc;
}

std::string ReportDocument::to_json() const {
    ordered_json j;
    j["a"] = a.get_str();
    j["b"] = b.get_str();
    j["irreducible"] = irreducible;
    j["discriminant"] = discriminant.get_str();
    j["primes"] = ordered_json::array();
    for (const auto& ev : primes) {
        ordered_json pj;
        pj["p"] = std::to_string(ev.p);
        pj["nu"] = std::to_string(ev.value);
        if (ev.type) {
            ordered_json tj = ordered_json::array();
            for (auto& [e, f] : ev.type->factors) {
                ordered_json fj;
                fj["e"] = std::to_string(e);
                fj["f"] = std::to_string(f);
                tj.push_back(fj);
            }
            pj["splitting"] = tj;
        }
        pj["engine_complete"] = ev.engine_complete;
        pj["engine_regular"] = ev.engine_regular;
        pj["index_lower"] = std::to_string(ev.engine_index_lower);
        pj["index_exact"] = ev.engine_index_exact;
        if (ev.common_divisor) pj["common_index_divisor"] = *ev.common_divisor;
        if (ev.engstrom_value) pj["engstrom"] = std::to_string(*ev.engstrom_value);
        if (ev.scan_upper) pj["scan_upper_bound"] = std::to_string(*ev.scan_upper);
        if (ev.scan_relative) pj["scan_relative_bound"] = std::to_string(*ev.scan_relative);
        if (!ev.notes.empty()) pj["notes"] = ev.notes;
        if (!ev.unresolved.empty()) pj["unresolved"] = ev.unresolved;
        j["primes"].push_back(pj);
    }
    j["field_index"] = std::to_string(field_index);
    j["integrally_closed"] = integrally_closed;
    j["closedness_certified"] = closedness_certified;
    j["monogenic_obstruction"] = monogenic_obstruction;
    j["discrepancies"] = discrepancies;
    return j.dump();
}

std::string ReportDocument::to_text() const {
    std::ostringstream os;
    os << "F(x) = x^7 + " << a.get_str() << " x + " << b.get_str() << "\n";
    if (!irreducible) {
        os << "  reducible over Q\n";
        return os.str();
    }
    os << "  disc = " << discriminant.get_str() << "\n";
    for (const auto& ev : primes) {
        os << "  p = " << ev.p << ": nu_p(i(K)) = " << ev.value;
        if (ev.type) os << ", splitting " << ev.type->str();
        if (ev.engine_index_exact) os << ", nu_p(ind alpha) = " << ev.engine_index_lower;
        else os << ", nu_p(ind alpha) >= " << ev.engine_index_lower;
        os << "\n";
        for (auto& n : ev.unresolved) os << "    unresolved: " << n << "\n";
    }
    os << "  i(K) = " << field_index << (monogenic_obstruction ? "  (K not monogenic)" : "") << "\n";
    os << "  Z[alpha] integrally closed: " << (integrally_closed ? "yes" : "no");
    if (!closedness_certified) os << "  (not fully certified)";
    os << "\n";
    for (auto& d : discrepancies) os << "  note: " << d << "\n";
    return os.str();
}

std::string ReportDocument::csv_header() {
    return "a,b,irreducible,nu2,nu3,field_index,closed,discrepancy_flags";
}

std::string ReportDocument::to_csv_row() const {
    std::ostringstream os;
    os << a.get_str() << "," << b.get_str() << "," << (irreducible ? 1 : 0) << ",";
    long n2 = 0, n3 = 0;
    for (const auto& ev : primes) {
        if (ev.p == 2) n2 = ev.value;
        if (ev.p == 3) n3 = ev.value;
    }
    if (irreducible)
        os << n2 << "," << n3 << "," << field_index << "," << (integrally_closed ? 1 : 0);
    else
        os << ",,,";
    os << "," << discrepancies.size();
    return os.str();
}

} // namespace septic
