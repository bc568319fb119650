#include "septic/assemble.hpp"

#include <sstream>

namespace septic {

NuEvidence assemble_nu(const Trinomial& t, long p, long scan_budget, unsigned long seed) {
    NuEvidence out;
    out.p = p;
    if (p == 2) out.value = nu2_index(t);
    else if (p == 3) out.value = nu3_index(t);
    else out.value = nup_index(t, p);

    OreResult ore = ore_factorization(t.poly(), p);
    out.engine_regular = ore.regular;
    out.engine_complete = ore.complete;
    out.engine_index_lower = ore.index_lower;
    out.engine_index_exact = ore.index_exact;
    out.notes = ore.notes;
    out.unresolved = ore.unresolved;

    if (ore.complete) {
        out.type = ore.type;
        bool divisor = is_common_index_divisor(ore.type, p);
        out.common_divisor = divisor;

        if (divisor != (out.value >= 1)) {
            std::ostringstream os;
            os << "p=" << p << " a=" << t.a.get_str() << " b=" << t.b.get_str()
               << ": Lemma says divisor=" << divisor << " but classifier nu=" << out.value
               << " (type " << ore.type.str() << ")";
            throw InconsistencyDetected(os.str());
        }

        try {
            long tab = engstrom_nu({p, ore.type});
            out.engstrom_value = tab;
            if (tab != out.value) {
                std::ostringstream os;
                os << "p=" << p << " a=" << t.a.get_str() << " b=" << t.b.get_str()
                   << ": table gives " << tab << ", classifier gives " << out.value
                   << " (type " << ore.type.str() << ")";
                throw InconsistencyDetected(os.str());
            }
        } catch (const NotTabulated&) {
            out.notes.push_back("splitting type not tabulated; classifier value stands");
        }

        try {
            out.tame_dK = tame_dK_valuation(ore.type, p);
        } catch (const WildRamification&) {
            // wild primes carry no tame d_K value
        }

        if (out.tame_dK && ore.index_exact) {
            long disc_val = padic_valuation(t.discriminant(), p).value();
            if (disc_val - 2 * ore.index_lower != *out.tame_dK) {
                std::ostringstream os;
                os << "p=" << p << ": nu_p(disc) - 2 ind = " << (disc_val - 2 * ore.index_lower)
                   << " but tame sum(e-1)f = " << *out.tame_dK;
                throw InconsistencyDetected(os.str());
            }
        }
    }

    if (scan_budget > 0) {
        std::optional<long> dK;
        if (out.engine_index_exact)
            dK = padic_valuation(t.discriminant(), p).value() - 2 * out.engine_index_lower;
        ScanResult sr = generator_scan(t, p, scan_budget, seed, dK);
        out.scan_relative = sr.relative_index_bound;
        out.scan_upper = sr.absolute_upper_bound;
        if (out.scan_upper && *out.scan_upper < out.value) {
            std::ostringstream os;
            os << "p=" << p << ": scan upper bound " << *out.scan_upper
               << " undercuts the classifier value " << out.value;
            throw InconsistencyDetected(os.str());
        }
    }
    return out;
}

} // namespace septic
