#include <sstream>

#include "confscale/ilp.hpp"

namespace confscale {

namespace {

constexpr std::size_t kTermsPerLine = 8;

void write_terms(std::ostream& out, const IlpModel& model, const std::vector<Term>& terms)
{
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& t = terms[k];
        if (k > 0 && k % kTermsPerLine == 0) out << "\n   ";
        const Count mag = t.coef < 0 ? -t.coef : t.coef;
        if (k == 0)
            out << (t.coef < 0 ? "- " : "") << mag << ' ' << model.variables[t.var].name;
        else
            out << (t.coef < 0 ? " - " : " + ") << mag << ' ' << model.variables[t.var].name;
    }
}

const char* sense_text(Sense s)
{
    switch (s) {
    case Sense::less_equal: return " <= ";
    case Sense::greater_equal: return " >= ";
    case Sense::equal: return " = ";
    }
    return " = ";
}

}  // namespace

void export_lp(std::ostream& out, const IlpModel& model)
{
    const auto& cfg = model.config;
    out << "\\ elastic conference scaling model: n=" << cfg.n << " delta=" << cfg.delta
        << " theta=" << cfg.theta << " M=" << model.big_m << '\n';

    out << "Minimize\n obj: ";
    if (model.objective.empty())
        out << "0 " << model.variables.front().name;
    else
        write_terms(out, model, model.objective);
    out << '\n';

    out << "Subject To\n";
    for (const auto& c : model.constraints) {
        out << ' ' << c.name << ": ";
        write_terms(out, model, c.terms);
        out << sense_text(c.sense) << c.rhs << '\n';
    }

    out << "Bounds\n";
    for (const auto& v : model.variables)
        if (v.kind == VarKind::integer) out << ' ' << v.name << " >= 0\n";

    out << "General\n";
    for (const auto& v : model.variables)
        if (v.kind == VarKind::integer) out << ' ' << v.name << '\n';

    out << "Binary\n";
    for (const auto& v : model.variables)
        if (v.kind == VarKind::binary) out << ' ' << v.name << '\n';

    out << "End\n";
}

std::string export_lp(const IlpModel& model)
{
    std::ostringstream out;
    export_lp(out, model);
    return out.str();
}

}  // namespace confscale
