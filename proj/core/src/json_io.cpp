#include "doflab/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace doflab {

double round12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.is_rational())
                row.push_back(to_string(m.q(r, c)));
            else
                row.push_back(round12(m.f(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"backend", backend_name(m.backend())}, {"entries", rows}};
}

Matrix matrix_from_json(const json& j) {
    const Backend b = parse_backend(j.at("backend").get<std::string>());
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const json& e = j.at("entries");
    if (e.size() != rows)
        throw std::invalid_argument("matrix entries do not match the row count");
    Matrix m(rows, cols, b);
    for (std::size_t r = 0; r < rows; ++r) {
        if (e[r].size() != cols)
            throw std::invalid_argument("matrix entries do not match the column count");
        for (std::size_t c = 0; c < cols; ++c) {
            if (b == Backend::rational)
                m.q(r, c) = e[r][c].is_string() ? parse_rational(e[r][c].get<std::string>())
                                                : Rational(e[r][c].get<long>());
            else
                m.f(r, c) = e[r][c].get<double>();
        }
    }
    return m;
}

json to_json(const Subspace& s) {
    const Matrix rows = s.rows();
    json basis = json::array();
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < rows.cols(); ++c) {
            if (rows.is_rational())
                row.push_back(to_string(rows.q(r, c)));
            else
                row.push_back(round12(rows.f(r, c)));
        }
        basis.push_back(std::move(row));
    }
    return json{{"ambient", s.ambient()}, {"basis", basis}, {"backend", backend_name(s.backend())}};
}

Subspace subspace_from_json(const json& j) {
    const auto ambient = j.at("ambient").get<std::size_t>();
    const Backend b = j.contains("backend") ? parse_backend(j.at("backend").get<std::string>()) : Backend::rational;
    const json& basis = j.at("basis");
    Matrix cols(ambient, basis.size(), b);
    for (std::size_t v = 0; v < basis.size(); ++v) {
        if (basis[v].size() != ambient)
            throw std::invalid_argument("basis vector length does not match ambient dimension");
        for (std::size_t r = 0; r < ambient; ++r) {
            const json& x = basis[v][r];
            if (b == Backend::rational)
                cols.q(r, v) = x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>());
            else
                cols.f(r, v) = x.is_string() ? parse_rational(x.get<std::string>()).get_d() : x.get<double>();
        }
    }
    return Subspace::span(cols);
}

json to_json(const Network& net) {
    json links = json::array();
    for (const auto& [key, m] : net.channels)
        links.push_back(json{{"rx", key.first}, {"tx", key.second}, {"matrix", to_json(m)}});
    return json{{"topology", topology_name(net.topology)},
                {"K", net.K},
                {"M_T", net.mt},
                {"M_R", net.mr},
                {"seed", net.seed},
                {"channels", links}};
}

json to_json(const MultilookResult& r) {
    auto part = [](const MultilookPart& p) { return json{{"source", p.source}, {"subspace", to_json(p.part)}}; };
    json sets = json::array();
    for (const auto& s : r.sets) {
        json parts = json::array();
        for (const auto& p : s)
            parts.push_back(part(p));
        sets.push_back(std::move(parts));
    }
    json discarded = json::array();
    for (const auto& p : r.discarded)
        discarded.push_back(part(p));
    return json{{"l_sigma", r.l_sigma}, {"sets", sets}, {"discarded", discarded}};
}

json to_json(const ChainLedger& ledger) {
    json ineqs = json::array();
    for (const auto& q : ledger.inequalities) {
        json terms = json::array();
        for (const auto& t : q.terms)
            terms.push_back(json{{"id", t.id}, {"sign", t.sign}});
        ineqs.push_back(json{{"lhs", q.lhs}, {"log", to_string(q.log)}, {"rate", to_string(q.rate)}, {"terms", terms}});
    }
    json registry = json::object();
    for (const auto& id : ledger.registry_order) {
        const auto& reg = ledger.registry.at(id);
        registry[id] = json{{"tx", reg.tx}, {"dim", reg.space.dim()}, {"provenance", reg.provenance}};
    }
    json trace = json::array();
    for (const auto& rec : ledger.trace) {
        json j{{"step", rec.index},
               {"rx", rec.rx},
               {"target", rec.target},
               {"action", rec.action},
               {"genie", rec.genie},
               {"genie_rows", rec.genie_rows},
               {"acceptable", rec.acceptable},
               {"observed_dim", rec.observed_dim},
               {"combined_rank", rec.combined_rank}};
        if (rec.genie_too_small)
            j["genie_too_small"] = true;
        if (rec.action == "intersect")
            j["intersection_dim"] = rec.intersection_dim;
        if (!rec.out.empty())
            j["out"] = rec.out;
        if (!rec.clean_index_set.empty())
            j["clean_index_set"] = rec.clean_index_set;
        if (rec.observation)
            j["observation"] = to_json(*rec.observation)["entries"];
        if (!rec.note.empty())
            j["note"] = rec.note;
        trace.push_back(std::move(j));
    }
    json out{{"script", ledger.name}, {"inequalities", ineqs}, {"registry", registry}};
    try {
        const BoundBreakdown b = ledger_breakdown(ledger);
        out["bound"] = to_string(b.bound);
        out["multilook_credit"] = b.multilook_credit;
        out["residual_positive"] = b.residual_positive;
        out["residual_negative"] = b.residual_negative;
    } catch (const ChainDoesNotClose&) {
        out["bound"] = nullptr;
    }
    out["degraded"] = ledger.degraded;
    out["trace"] = trace;
    return out;
}

json to_json(const CertReport& rep) {
    json steps = json::array();
    for (const auto& s : rep.steps)
        steps.push_back(json{{"step", s.index},
                             {"rx", s.rx},
                             {"target", s.target},
                             {"action", s.action},
                             {"clean_dims", s.clean_dims},
                             {"observed_dim", s.observed_dim},
                             {"combined_rank", s.combined_rank},
                             {"acceptable", s.acceptable},
                             {"full_rank", s.full_rank},
                             {"clean_index_set", s.clean_index_set}});
    return json{{"M", rep.M},     {"N", rep.N},       {"regime", cert_regime_name(rep.regime)},
                {"a", rep.a},     {"pass", rep.pass}, {"bound", to_string(rep.bound)},
                {"steps", steps}};
}

json to_json(const DoFReport& rep) {
    auto opt = [](const std::optional<Rational>& q) -> json { return q ? json(to_string(*q)) : json(nullptr); };
    return json{{"K", rep.point.K},
                {"M", rep.point.M},
                {"N", rep.point.N},
                {"gamma", to_string(rep.point.gamma)},
                {"counting", to_string(rep.counting)},
                {"decomposition", to_string(rep.decomposition)},
                {"dstar", opt(rep.dstar)},
                {"four_to_one", opt(rep.four_to_one)},
                {"many_to_one_counting", opt(rep.many_to_one_counting)},
                {"best_known", to_string(rep.best_known)},
                {"status", status_name(rep.status)},
                {"regime", rep.regime}};
}

json to_json(const PrecoderSet& p) {
    json v = json::object();
    for (const auto& [k, m] : p.V)
        v[std::to_string(k)] = to_json(m);
    return json{{"d", p.d}, {"V", v}};
}

json to_json(const AlignmentReport& rep) {
    json rx = json::array();
    for (const auto& r : rep.receivers)
        rx.push_back(json{{"rx", r.rx},
                          {"interference_dim", r.interference_dim},
                          {"desired_rank", r.desired_rank},
                          {"separable", r.separable},
                          {"pass", r.pass}});
    return json{{"d", rep.d}, {"precoders_full_rank", rep.precoders_full_rank}, {"pass", rep.pass}, {"receivers", rx}};
}

namespace {

std::string kind_name(GenieKind k) {
    switch (k) {
    case GenieKind::generic:
        return "generic";
    case GenieKind::ref:
        return "ref";
    case GenieKind::full:
        return "full";
    }
    return "?";
}

GenieKind parse_kind(const std::string& s) {
    if (s == "generic")
        return GenieKind::generic;
    if (s == "ref")
        return GenieKind::ref;
    if (s == "full")
        return GenieKind::full;
    throw std::invalid_argument("unknown genie kind: " + s);
}

}  // namespace

json to_json(const ChainScript& s) {
    json steps = json::array();
    for (const auto& st : s.steps) {
        json genie = json::array();
        for (const auto& p : st.genie) {
            json g{{"kind", kind_name(p.kind)}};
            if (p.kind == GenieKind::ref)
                g["id"] = p.id;
            else
                g["tx"] = p.tx;
            if (p.kind == GenieKind::generic)
                g["dims"] = p.dims;
            if (p.kind == GenieKind::full && p.credit != 1)
                g["credit"] = p.credit;
            genie.push_back(std::move(g));
        }
        json j{{"rx", st.rx}, {"genie", genie}};
        if (st.target != 0) {
            j["target"] = st.target;
            if (st.target_credit != 1)
                j["target_credit"] = st.target_credit;
        }
        if (!st.intersect_with.empty())
            j["intersect_with"] = st.intersect_with;
        if (!st.out.empty())
            j["out"] = st.out;
        if (st.single_user)
            j["single_user"] = true;
        steps.push_back(std::move(j));
    }
    return json{{"name", s.name},
                {"topology", topology_name(s.topology)},
                {"K", s.K},
                {"M_T", s.mt},
                {"M_R", s.mr},
                {"steps", steps}};
}

ChainScript script_from_json(const json& j) {
    ChainScript s;
    s.name = j.value("name", std::string("custom"));
    s.topology = parse_topology(j.value("topology", std::string("full_ic")));
    s.K = j.at("K").get<int>();
    s.mt = j.at("M_T").get<int>();
    s.mr = j.at("M_R").get<int>();
    for (const auto& js : j.at("steps")) {
        ChainStep st;
        st.rx = js.at("rx").get<int>();
        st.target = js.value("target", 0);
        st.target_credit = js.value("target_credit", 1);
        st.intersect_with = js.value("intersect_with", std::string());
        st.out = js.value("out", std::string());
        st.single_user = js.value("single_user", false);
        for (const auto& g : js.value("genie", json::array())) {
            GeniePart p;
            p.kind = parse_kind(g.at("kind").get<std::string>());
            p.tx = g.value("tx", 0);
            p.dims = g.value("dims", 0);
            p.id = g.value("id", std::string());
            p.credit = g.value("credit", 1);
            st.genie.push_back(p);
        }
        s.steps.push_back(std::move(st));
    }
    return s;
}

}  // namespace doflab
