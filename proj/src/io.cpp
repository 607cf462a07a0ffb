#include "covermonoid/io.hpp"

#include <sstream>

namespace covermonoid {

std::string int_str(const Int& v) { return v.get_str(); }

std::string rat_str(const Rat& v) { return v.get_str(); }

Json int_vector_json(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_str(x));
    return a;
}

Json long_vector_json(const std::vector<long>& v) {
    Json a = Json::array();
    for (long x : v) a.push_back(std::to_string(x));
    return a;
}

Json matrix_json(const IntMatrix& A) {
    Json rows = Json::array();
    for (long i = 0; i < A.rows; ++i) {
        Json row = Json::array();
        for (long j = 0; j < A.cols; ++j) row.push_back(int_str(A.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json element_json(const FiniteAbelianGroup& M, long e) { return long_vector_json(M.coords(e)); }

Json scalar_json(const FieldScalar& s) {
    if (s.field().is_rational()) return rat_str(s.rational());
    return s.residue();
}

Json ray_json(const Ray& E) {
    const Int den = E.denominator();
    Json numerators = Json::array();
    for (const Rat& e : E.e_values()) {
        Rat scaled = e * Rat(den);
        numerators.push_back(int_str(Int(scaled.get_num())));
    }
    Json j;
    j["denominator"] = int_str(den);
    j["e_values"] = numerators;
    j["generator_values"] = int_vector_json(E.generator_values());
    return j;
}

Json table_json(const MultiplicationTable& psi) {
    const Field& F = psi.field();
    Json j;
    j["field"] = F.is_rational() ? Json("Q") : Json("GF(" + std::to_string(F.p) + ")");
    Json matrix = Json::array();
    for (long m = 0; m < psi.group().size(); ++m) {
        Json row = Json::array();
        for (long n = 0; n < psi.group().size(); ++n) row.push_back(scalar_json(psi.at(m, n)));
        matrix.push_back(row);
    }
    j["matrix"] = matrix;
    return j;
}

namespace {

Json pair_json(const PairIndex& p) {
    return Json::array({std::to_string(p.m), std::to_string(p.n)});
}

std::string variable_text(const PairIndex& p) {
    return "x_{" + std::to_string(p.m) + "," + std::to_string(p.n) + "}";
}

}  // namespace

Json presentation_json(const MonoidPresentation& P) {
    Json vars = Json::array();
    for (const PairIndex& p : P.variables) vars.push_back(pair_json(p));
    Json rels = Json::array();
    for (const auto& rel : P.relations) {
        Json r;
        r["lhs"] = Json::array({pair_json(P.variables[rel.lhs[0]]), pair_json(P.variables[rel.lhs[1]])});
        r["rhs"] = Json::array({pair_json(P.variables[rel.rhs[0]]), pair_json(P.variables[rel.rhs[1]])});
        rels.push_back(r);
    }
    Json j;
    j["variables"] = vars;
    j["relations"] = rels;
    return j;
}

std::string presentation_text(const MonoidPresentation& P) {
    std::ostringstream out;
    for (const auto& rel : P.relations)
        out << variable_text(P.variables[rel.lhs[0]]) << "*"
            << variable_text(P.variables[rel.lhs[1]]) << " - "
            << variable_text(P.variables[rel.rhs[0]]) << "*"
            << variable_text(P.variables[rel.rhs[1]]) << "\n";
    return out.str();
}

Json fan_json(const Fan& f) {
    Json rays = Json::array();
    for (const auto& r : f.rays) rays.push_back(int_vector_json(r));
    Json cones = Json::array();
    for (const auto& c : f.max_cones) cones.push_back(long_vector_json(c));
    Json j;
    j["lattice_rank"] = std::to_string(f.lattice_rank);
    j["rays"] = rays;
    j["max_cones"] = cones;
    return j;
}

std::string fan_text(const Fan& f) {
    std::ostringstream out;
    out << "rank " << f.lattice_rank << "\n";
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        out << "ray " << i << ":";
        for (const Int& x : f.rays[i]) out << " " << x.get_str();
        out << "\n";
    }
    for (const auto& c : f.max_cones) {
        out << "cone";
        for (long i : c) out << " " << i;
        out << "\n";
    }
    return out.str();
}

namespace {

Json hom_images_json(const GroupHomomorphism& phi) {
    Json a = Json::array();
    for (long img : phi.images) a.push_back(element_json(phi.target, img));
    return a;
}

}  // namespace

Json invariants_json(const TwoDegreeInvariants& I) {
    Json j;
    j["r"] = std::to_string(I.r);
    j["alpha"] = std::to_string(I.alpha);
    j["N"] = std::to_string(I.N);
    j["qbar"] = std::to_string(I.qbar);
    j["qhat"] = std::to_string(I.qhat);
    j["dqhat"] = std::to_string(I.dqhat);
    j["qprime"] = std::to_string(I.qprime);
    j["z"] = std::to_string(I.z);
    j["x"] = std::to_string(I.x);
    j["y"] = std::to_string(I.y);
    j["w"] = std::to_string(I.w);
    j["gamma"] = std::to_string(I.gamma);
    j["f"] = long_vector_json(I.f);
    Json good = Json::array();
    for (const auto& [A, B] : I.good)
        good.push_back(Json::array({std::to_string(A), std::to_string(B)}));
    j["good"] = good;
    j["group"] = I.presentation.group.spec();
    j["m"] = element_json(I.presentation.group, I.presentation.e1);
    j["n"] = element_json(I.presentation.group, I.presentation.e2);
    return j;
}

Json sigma_json(const SigmaDatum& chi) {
    Json j;
    j["r"] = std::to_string(chi.r);
    j["alpha"] = std::to_string(chi.alpha);
    j["N"] = std::to_string(chi.N);
    j["qbar"] = std::to_string(chi.qbar);
    j["phi_images"] = hom_images_json(chi.phi);
    return j;
}

Json nc_row_json(const NCRow& row) {
    Json j;
    j["family"] = row.family;
    j["l"] = std::to_string(row.l);
    j["r"] = std::to_string(row.r);
    j["alpha"] = std::to_string(row.alpha);
    j["N"] = std::to_string(row.N);
    j["qbar"] = std::to_string(row.qbar);
    j["phi_images"] = hom_images_json(row.phi);
    j["ray"] = ray_json(row.ray);
    return j;
}

Json smoothness_json(const FiniteAbelianGroup& M, const SmoothnessVerdict& v) {
    Json j;
    j["group"] = M.spec();
    j["smooth"] = v.smooth;
    if (v.triple) {
        Json t = Json::array();
        for (long e : *v.triple) t.push_back(element_json(M, e));
        j["triple"] = t;
        j["relation"] = {
            {"lhs", Json::array({pair_json(v.relation->lhs[0]), pair_json(v.relation->lhs[1])})},
            {"rhs", Json::array({pair_json(v.relation->rhs[0]), pair_json(v.relation->rhs[1])})}};
    }
    return j;
}

Json irreducibility_json(const FiniteAbelianGroup& M, const IrreducibilityReport& r) {
    Json j;
    j["group"] = M.spec();
    switch (r.verdict) {
        case Verdict::reducible: j["verdict"] = "reducible"; break;
        case Verdict::irreducible: j["verdict"] = "irreducible"; break;
        case Verdict::unknown: j["verdict"] = "unknown"; break;
    }
    if (r.certificate) {
        Json c = Json::array();
        for (long e : *r.certificate) c.push_back(element_json(M, e));
        j["certificate"] = c;
    }
    j["reason"] = r.reason;
    return j;
}

}  // namespace covermonoid
