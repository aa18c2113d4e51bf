#include "apery/report.hpp"

#include <sstream>

namespace apery {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_int(const Int& v) {
    static const Int bound = Int(1) << 53;
    if (v >= -bound && v <= bound) return v.convert_to<long long>();
    return v.str();  // too wide for a double-safe JSON number
}

ordered_json json_vector(const LatticeVector& v) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < v.dim(); ++i) arr.push_back(json_int(v[i]));
    return arr;
}

ordered_json json_vectors(const std::vector<LatticeVector>& vs) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : vs) arr.push_back(json_vector(v));
    return arr;
}

}  // namespace

ordered_json report_to_json(const Report& rep) {
    ordered_json j;
    j["generators"] = json_vectors(rep.generators);
    j["extremal_rays"] = json_vectors(rep.extremal_rays);
    j["dimension"] = rep.dimension;
    j["codimension"] = rep.codimension;
    j["degrees"] = ordered_json::array();
    for (const Rat& q : rep.degrees) j["degrees"].push_back(rat_to_string(q));
    j["homogeneous"] = rep.homogeneous;

    {
        ordered_json r;
        r["exists"] = rep.reduction.exists;
        r["bound"] = rep.reduction.bound ? json_int(*rep.reduction.bound) : ordered_json(nullptr);
        r["reduction_number"] = rep.reduction.reduction_number
                                    ? ordered_json(*rep.reduction.reduction_number)
                                    : ordered_json(nullptr);
        r["lower_bound"] = rep.reduction.lower_bound;
        j["monomial_reduction"] = std::move(r);
    }

    {
        ordered_json a;
        a["size"] = rep.apery.elements.size();
        a["max_order"] = rep.apery.max_order;
        a["elements"] = ordered_json::array();
        for (const auto& el : rep.apery.elements) {
            ordered_json e;
            e["value"] = json_vector(el.value);
            e["order"] = el.order;
            e["rem"] = json_vector(el.rem);
            a["elements"].push_back(std::move(e));
        }
        j["apery"] = std::move(a);
    }

    j["cohen_macaulay"] = rep.cohen_macaulay;
    j["gorenstein"] = rep.gorenstein;

    {
        ordered_json m;
        m["value"] = rep.mult.value ? json_int(*rep.mult.value) : ordered_json(nullptr);
        m["method"] = to_string(rep.mult.method);
        m["certified"] = rep.mult.certified;
        m["apery_upper_bound"] = json_int(rep.mult.upper_bound_apery);
        m["det_bound"] =
            rep.mult.dim2_det_bound ? json_int(*rep.mult.dim2_det_bound) : ordered_json(nullptr);
        j["multiplicity"] = std::move(m);
    }

    {
        ordered_json g;
        g["cm"] = rep.graded.cm ? ordered_json(*rep.graded.cm) : ordered_json(nullptr);
        g["gorenstein"] =
            rep.graded.gorenstein ? ordered_json(*rep.graded.gorenstein) : ordered_json(nullptr);
        g["betas"] = rep.graded.betas;
        g["d_S"] = rep.graded.d_S;
        g["regularity"] =
            rep.graded.regularity ? ordered_json(*rep.graded.regularity) : ordered_json(nullptr);
        j["graded"] = std::move(g);
    }

    if (rep.dim2) {
        ordered_json d2;
        d2["pick_lhs"] = json_int(rep.dim2->pick_lhs);
        d2["determinant"] = json_int(rep.dim2->determinant);
        d2["pick_holds"] = rep.dim2->pick_holds;
        d2["group_index"] = json_int(rep.dim2->group_index);
        j["dim2"] = std::move(d2);
    } else {
        j["dim2"] = nullptr;
    }

    if (rep.alternative_reduction) {
        ordered_json alt;
        alt["binomials"] = ordered_json::array();
        for (const auto& [lhs, rhs] : rep.alternative_reduction->binomials)
            alt["binomials"].push_back(ordered_json::array({json_vector(lhs), json_vector(rhs)}));
        alt["monomials"] = json_vectors(rep.alternative_reduction->monomials);
        j["alternative_reduction"] = std::move(alt);
    } else {
        j["alternative_reduction"] = nullptr;
    }

    j["annotations"] = rep.annotations;
    return j;
}

namespace {

std::string join_vectors(const std::vector<LatticeVector>& vs) {
    std::string out;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ' ';
        out += vs[i].to_string();
    }
    return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string report_to_text(const Report& rep) {
    std::ostringstream os;
    os << "generators:      " << join_vectors(rep.generators) << '\n';
    os << "extremal rays:   " << join_vectors(rep.extremal_rays) << '\n';
    os << "dimension:       " << rep.dimension << '\n';
    os << "codimension:     " << rep.codimension << '\n';
    os << "degrees:         ";
    if (rep.degrees.empty()) os << "(none)";
    for (size_t i = 0; i < rep.degrees.size(); ++i) {
        if (i) os << ' ';
        os << rat_to_string(rep.degrees[i]);
    }
    os << '\n';
    os << "homogeneous:     " << yes_no(rep.homogeneous) << '\n';

    os << "monomial reduction: " << yes_no(rep.reduction.exists);
    if (rep.reduction.exists) {
        os << " (reduction number " << *rep.reduction.reduction_number;
        if (rep.reduction.bound) os << ", bound " << *rep.reduction.bound;
        os << ", lower bound " << rep.reduction.lower_bound << ")";
    } else {
        os << " (lower bound " << rep.reduction.lower_bound << ")";
    }
    os << '\n';

    os << "apery set:       " << rep.apery.elements.size() << " elements, max order "
       << rep.apery.max_order << '\n';
    for (const auto& el : rep.apery.elements)
        os << "  " << el.value.to_string() << "  order " << el.order << "  rem "
           << el.rem.to_string() << '\n';

    os << "cohen-macaulay:  " << yes_no(rep.cohen_macaulay) << '\n';
    os << "gorenstein:      " << yes_no(rep.gorenstein) << '\n';

    os << "multiplicity:    ";
    if (rep.mult.value)
        os << *rep.mult.value;
    else
        os << "unknown";
    os << " (method " << to_string(rep.mult.method) << ", "
       << (rep.mult.certified ? "certified" : "uncertified") << ", apery bound "
       << rep.mult.upper_bound_apery;
    if (rep.mult.dim2_det_bound) os << ", det bound " << *rep.mult.dim2_det_bound;
    os << ")\n";

    os << "graded ring:     ";
    if (rep.graded.cm)
        os << "cm " << yes_no(*rep.graded.cm) << ", gorenstein " << yes_no(*rep.graded.gorenstein);
    else
        os << "cm n/a, gorenstein n/a";
    os << ", betas";
    for (long long b : rep.graded.betas) os << ' ' << b;
    os << ", d_S " << rep.graded.d_S;
    if (rep.graded.regularity) os << ", regularity " << *rep.graded.regularity;
    os << '\n';

    if (rep.dim2) {
        os << "dim2:            pick " << rep.dim2->pick_lhs << " vs det " << rep.dim2->determinant
           << " (" << (rep.dim2->pick_holds ? "holds" : "fails") << "), group index "
           << rep.dim2->group_index << '\n';
    }

    if (rep.alternative_reduction) {
        os << "alternative reduction:";
        for (const auto& [lhs, rhs] : rep.alternative_reduction->binomials)
            os << " " << lhs.to_string() << "-" << rhs.to_string();
        for (const auto& m : rep.alternative_reduction->monomials) os << " " << m.to_string();
        os << '\n';
    }

    if (!rep.annotations.empty()) {
        os << "annotations:\n";
        for (const auto& a : rep.annotations) os << "  - " << a << '\n';
    }
    return os.str();
}

}  // namespace apery
