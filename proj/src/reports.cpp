#include "confault/reports.hpp"

#include "confault/paths.hpp"

namespace confault {

namespace {

using nlohmann::json;

json json_of_edge(const Edge& e) { return json::array({e.tail, e.head}); }

json json_of_edges(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back(json_of_edge(e));
    return out;
}

json json_of_distance(int d) { return d == kUnreachable ? json(nullptr) : json(d); }

json json_of_verdict_enum(Verdict v) {
    switch (v) {
        case Verdict::positive:
            return "positive";
        case Verdict::negative:
            return "negative";
        default:
            return "not-applicable";
    }
}

}  // namespace

json json_of_graph(const Digraph& g) {
    json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = json_of_edges(g.edges());
    return doc;
}

json json_of_poly(const IntPoly& p) {
    json coeffs = json::array();
    for (const Int& c : p.coeffs) coeffs.push_back(c.str());
    json doc;
    doc["degree"] = p.coeffs.empty() ? json(nullptr) : json(p.degree());
    doc["coefficients"] = coeffs;
    doc["display"] = to_string(p);
    return doc;
}

json json_of_verdict(const DistinguishVerdict& v) {
    json doc;
    doc["distinguishable"] = v.distinguishable;
    doc["first_divergent_moment"] =
        v.first_divergent_moment ? json(*v.first_divergent_moment) : json(nullptr);
    if (!v.certificate) {
        doc["certificate"] = nullptr;
        return doc;
    }
    const Theorem3Certificate& cert = *v.certificate;
    json c;
    c["vertex"] = cert.vertex;
    c["kind"] = cert.kind == CertificateKind::distance_mismatch ? "distance-mismatch"
                                                                : "shortest-count-mismatch";
    c["distance_first"] = json_of_distance(cert.dist_first);
    c["distance_second"] = json_of_distance(cert.dist_second);
    if (cert.kind == CertificateKind::shortest_count_mismatch) {
        c["count_first"] = cert.count_first.str();
        c["count_second"] = cert.count_second.str();
    } else {
        c["count_first"] = nullptr;
        c["count_second"] = nullptr;
    }
    doc["certificate"] = c;
    return doc;
}

json json_of_detect_report(const DetectReport& rep) {
    json doc;
    doc["failure_set"] = json_of_edges(rep.failure_set);
    doc["observer"] = rep.observer;

    json p1;
    p1["verdict"] = json_of_verdict_enum(rep.prop1.verdict);
    p1["witness"] = rep.prop1.witness ? json_of_edge(*rep.prop1.witness) : json(nullptr);
    doc["prop1"] = p1;

    json p2;
    p2["verdict"] = json_of_verdict_enum(rep.prop2.verdict);
    p2["common_head"] = rep.prop2.common_head ? json(*rep.prop2.common_head) : json(nullptr);
    p2["root"] = rep.prop2.root ? json(*rep.prop2.root) : json(nullptr);
    doc["prop2"] = p2;

    json c3;
    c3["verdict"] = json_of_verdict_enum(rep.cor3.verdict);
    c3["witness"] = rep.cor3.witness ? json_of_edge(*rep.cor3.witness) : json(nullptr);
    doc["cor3"] = c3;

    doc["exact"] = json_of_verdict(rep.exact);
    return doc;
}

json json_of_plan(const ObservationPlan& plan, ObserveMode mode) {
    json covered = json::array();
    for (const auto& edges : plan.covered) covered.push_back(json_of_edges(edges));
    json doc;
    doc["mode"] = mode == ObserveMode::set_cover ? "set-cover" : "literal";
    doc["observers"] = plan.observers;
    doc["covered"] = covered;
    doc["residual"] = json_of_edges(plan.residual);
    return doc;
}

json json_of_lemma1(const Lemma1Report& rep) {
    Int lead = rep.poly.leading();
    if (lead < 0) lead = -lead;
    json doc;
    doc["i"] = rep.i;
    doc["j"] = rep.j;
    doc["poly"] = json_of_poly(rep.poly);
    doc["leading_abs"] = lead.str();
    doc["expected_degree"] = rep.expected_degree;
    doc["expected_leading_abs"] = rep.expected_leading_abs.str();
    doc["pass"] = rep.pass;
    return doc;
}

json json_of_info(const Digraph& g) {
    const IntMatrix l = laplacian(g);
    json lap = json::array();
    for (int r = 0; r < l.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < l.cols(); ++c) row.push_back(l.at(r, c).convert_to<long long>());
        lap.push_back(row);
    }
    json doc;
    doc["n"] = g.vertex_count();
    doc["edge_count"] = g.edge_count();
    doc["edges"] = json_of_edges(g.edges());
    doc["laplacian"] = lap;
    doc["out_branching_roots"] = out_branching_roots(g);
    doc["strongly_connected"] = is_strongly_connected(g);
    doc["char_poly"] = json_of_poly(char_poly(g));
    return doc;
}

}  // namespace confault
