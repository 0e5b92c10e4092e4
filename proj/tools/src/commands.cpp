#include "qstretch/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "qstretch/groebner.hpp"
#include "qstretch/koszul.hpp"
#include "qstretch/quotient_algebra.hpp"
#include "qstretch/resolution.hpp"
#include "qstretch/stretch.hpp"
#include "qstretch/transport.hpp"

namespace qstretch::cli {

using Json = nlohmann::ordered_json;

const CheckRecord* Report::first_failure() const {
    for (const auto& r : records) {
        if (r.failed()) return &r;
    }
    return nullptr;
}

std::string Report::to_json(bool indent) const { return indent ? json.dump(2) + "\n" : json.dump() + "\n"; }

std::string Report::to_table() const {
    std::size_t name_w = 6, pred_w = 9, comp_w = 8;
    for (const auto& r : records) {
        name_w = std::max(name_w, r.name.size());
        pred_w = std::max(pred_w, r.predicted.size());
        comp_w = std::max(comp_w, r.computed.size());
    }
    pred_w = std::min<std::size_t>(pred_w, 40);
    comp_w = std::min<std::size_t>(comp_w, 40);
    auto cell = [](std::string s, std::size_t w) {
        if (s.size() > w) s = s.substr(0, w - 3) + "...";
        return s + std::string(w - s.size(), ' ');
    };
    std::ostringstream out;
    if (json.contains("algebra")) {
        const auto& a = json["algebra"];
        out << "algebra: " << a["vertices"].size() << " vertices, " << a["arrows"].size() << " arrows, "
            << a["relations"].size() << " relations over " << a["field"].get<std::string>();
        if (a.contains("dim")) out << ", dim " << a["dim"].get<std::size_t>();
        out << "\n";
    }
    for (const char* key : {"betti", "stretched_betti"}) {
        if (!json.contains(key)) continue;
        out << key << ":\n";
        for (const auto& step : json[key]["steps"]) {
            out << "  P^" << step["n"].get<std::size_t>() << ":";
            for (const auto& s : step["summands"]) {
                out << " " << s["vertex"].get<std::string>();
                if (s.contains("degree")) out << "(" << s["degree"].get<int>() << ")";
            }
            out << "\n";
        }
        out << "  pdim " << json[key]["pdim"].get<std::string>() << "\n";
    }
    out << cell("record", name_w) << "  " << cell("predicted", pred_w) << "  " << cell("computed", comp_w)
        << "  status\n";
    for (const auto& r : records) {
        out << cell(r.name, name_w) << "  " << cell(r.predicted, pred_w) << "  " << cell(r.computed, comp_w) << "  "
            << r.status_string() << "\n";
    }
    return out.str();
}

std::string fnv1a_digest(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

Json presentation_json(const Presentation& p) {
    Json j;
    j["field"] = p.field.to_string();
    j["vertices"] = p.quiver.vertex_names();
    Json arrows = Json::array();
    for (const auto& a : p.quiver.arrows()) {
        arrows.push_back({{"name", a.name},
                          {"source", p.quiver.vertex_name(a.source)},
                          {"target", p.quiver.vertex_name(a.target)}});
    }
    j["arrows"] = arrows;
    Json rels = Json::array();
    for (const auto& r : p.relations) rels.push_back(format_element(r, p.quiver));
    j["relations"] = rels;
    return j;
}

Json betti_json(const MinimalResolution& res) {
    Json steps = Json::array();
    for (std::size_t n = 0; n < res.steps.size(); ++n) {
        Json summands = Json::array();
        for (const auto& g : res.steps[n].generators) {
            Json s;
            s["vertex"] = res.algebra.idempotent_label(g.idempotent);
            if (res.graded && g.degree) s["degree"] = *g.degree;
            summands.push_back(s);
        }
        steps.push_back({{"n", n}, {"rank", res.steps[n].generators.size()}, {"summands", summands}});
    }
    Json j;
    j["n_max"] = res.n_max;
    j["graded"] = res.graded;
    j["terminated"] = res.terminated;
    j["steps"] = steps;
    j["pdim"] = pdim_of(res).to_string();
    return j;
}

Json record_json(const CheckRecord& r) {
    Json j;
    j["name"] = r.name;
    j["predicted"] = r.predicted;
    j["computed"] = r.computed;
    j["status"] = r.status_string();
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

CheckRecord verdict_record(std::string name, std::string predicted, const DegreeVerdict& v, std::string computed) {
    CheckRecord r;
    r.name = std::move(name);
    r.predicted = std::move(predicted);
    r.computed = std::move(computed);
    r.status = v.status;
    r.up_to = v.up_to;
    r.detail = v.reason;
    if (r.status == Status::Fail && v.failure_degree) r.detail += " (n = " + std::to_string(*v.failure_degree) + ")";
    return r;
}

std::string verdict_value(const DegreeVerdict& v, bool pair) {
    if (!v.ok()) return "none";
    if (pair) return "(" + std::to_string(*v.D) + "," + std::to_string(*v.A) + ")";
    return "d=" + std::to_string(*v.D);
}

class Runner {
public:
    Runner(const Options& o, std::string_view text) : opt_(o), pres_(parse_algebra_file(text)) {
        report_.json["tool"] = "qstretch";
        report_.json["version"] = kToolVersion;
        report_.json["input_digest"] = fnv1a_digest(text);
        report_.json["command"] = o.command;
        report_.json["algebra"] = presentation_json(pres_);
    }

    Report run() {
        auto t0 = std::chrono::steady_clock::now();
        const std::string& c = opt_.command;
        if (c == "stretch") {
            stretch();
        } else if (c == "basis") {
            basis();
        } else if (c == "dims") {
            dims();
        } else if (c == "resolve") {
            resolve();
        } else if (c == "check d-koszul") {
            d_koszul(algebra_at(opt_.A), opt_.d);
        } else if (c == "check stacked") {
            stacked(algebra_at(opt_.A), std::nullopt);
        } else if (c == "verify stratifying") {
            stratifying();
        } else if (c == "verify transport") {
            transport();
        } else if (c == "verify bimodule") {
            bimodule();
        } else if (c == "verify idim") {
            idim();
        } else if (c == "report") {
            full_report();
        } else {
            throw Error("unknown command '" + c + "'");
        }
        Json recs = Json::array();
        for (const auto& r : report_.records) recs.push_back(record_json(r));
        report_.json["records"] = recs;
        report_.exit_code = report_.first_failure() ? 1 : 0;
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report_.json["timing"] = {{"seconds", secs}};
        return std::move(report_);
    }

private:
    const QuotientAlgebra& lambda() {
        if (!lambda_) {
            lambda_ = std::make_shared<const QuotientAlgebra>(
                QuotientAlgebra::build(pres_.quiver, pres_.relations, pres_.field, opt_.degree_cap));
            report_.json["algebra"]["dim"] = lambda_->dim();
            report_.json["algebra"]["graded"] = lambda_->is_graded();
        }
        return *lambda_;
    }

    const StretchedPresentation& stretched() {
        if (!sp_) sp_ = std::make_shared<const StretchedPresentation>(stretch_algebra(lambda(), opt_.A, opt_.degree_cap));
        return *sp_;
    }

    const QuotientAlgebra& algebra_at(std::size_t A) { return A == 1 ? lambda() : stretched().algebra; }

    void add(CheckRecord r) { report_.records.push_back(std::move(r)); }
    void add(const std::vector<CheckRecord>& rs) {
        for (const auto& r : rs) add(r);
    }

    void groebner_record(const QuotientAlgebra& a, const std::string& name) {
        const auto& g = a.groebner();
        CheckRecord r = compare(name, "complete", g.complete ? "complete" : "incomplete");
        r.detail = std::to_string(g.basis.size()) + " elements, degree cap " + std::to_string(g.degree_cap);
        add(std::move(r));
    }

    void stretch() {
        const auto& sp = stretched();
        const auto& q = lambda().quiver();
        Presentation out{pres_.field, sp.map.stretched, sp.relations};
        std::string text = emit_algebra_file(out);
        report_.json["stretched"] = presentation_json(out);
        report_.json["stretched"]["dim"] = sp.algebra.dim();
        add(compare("counting.vertices", q.vertex_count() + q.arrow_count() * (opt_.A - 1),
                    sp.map.stretched.vertex_count()));
        add(compare("counting.arrows", q.arrow_count() * opt_.A, sp.map.stretched.arrow_count()));
        add(compare("stretch.inheritance", "inherited", sp.inheritance.ok() ? "inherited" : "not inherited"));
        add(compare("stretch.relations.minimal", "minimal", sp.minimality.ok() ? "minimal" : "redundant"));
        if (opt_.emit) {
            std::ofstream f(*opt_.emit, std::ios::binary);
            if (!f) throw Error("cannot write '" + *opt_.emit + "'");
            f << text;
            report_.json["emitted"] = *opt_.emit;
        }
    }

    void basis() {
        const auto& a = lambda();
        Json words = Json::array();
        for (std::size_t i = 0; i < a.dim(); ++i) words.push_back(a.basis_word(i).to_string(a.quiver()));
        Json gb = Json::array();
        for (const auto& g : a.groebner_basis().elements()) gb.push_back(format_element(g, a.quiver()));
        report_.json["groebner_basis"] = gb;
        report_.json["basis"] = words;
        groebner_record(a, "groebner.complete");
    }

    void dims() {
        const auto& a = lambda();
        Json verts = Json::array();
        for (VertexId v = 0; v < a.quiver().vertex_count(); ++v) {
            verts.push_back({{"vertex", a.quiver().vertex_name(v)},
                             {"right_projective", a.right_projective_dim(v)},
                             {"left_projective", a.left_projective_dim(v)}});
        }
        report_.json["dimensions"] = {{"total", a.dim()},
                                      {"radical", a.radical_basis().size()},
                                      {"loewy_length", a.loewy_length()},
                                      {"vertices", verts}};
        groebner_record(a, "groebner.complete");
        std::size_t sum = 0;
        for (VertexId v = 0; v < a.quiver().vertex_count(); ++v) sum += a.right_projective_dim(v);
        add(compare("dimension.projectives", a.dim(), sum));
    }

    void resolution_records(const MinimalResolution& res, const std::string& prefix) {
        add(compare(prefix + ".d-squared-zero", "true", res.d_squared_zero ? "true" : "false"));
        add(compare(prefix + ".minimal", "true", res.minimal ? "true" : "false"));
        add(compare(prefix + ".exact", "true", res.exact ? "true" : "false"));
    }

    void resolve() {
        if (opt_.module == "simple") {
            auto res = resolve_top(lambda(), opt_.n_max);
            report_.json["betti"] = betti_json(res);
            resolution_records(res, "resolution");
        } else if (opt_.module == "dual") {
            auto a = StructuredAlgebra::from_quotient(lambda());
            auto op = StructuredAlgebra::opposite(a);
            auto res = minimal_resolution(dual_regular(a, op), opt_.n_max);
            report_.json["betti"] = betti_json(res);
            report_.json["injective_dimension"] = pdim_of(res).to_string();
            resolution_records(res, "resolution");
        } else if (opt_.module == "quotient-eps") {
            const auto& sp = stretched();
            auto s = StructuredAlgebra::from_quotient(std::make_shared<const QuotientAlgebra>(sp.algebra));
            auto env = StructuredAlgebra::enveloping(s, opt_.budget);
            auto res = minimal_resolution(epsilon_quotient_module(sp, s, env), opt_.n_max);
            Json j = betti_json(res);
            j.erase("steps");
            Json dims = Json::array();
            for (const auto& st : res.steps) dims.push_back(st.dim());
            j["dims"] = dims;
            report_.json["bimodule_resolution"] = j;
            resolution_records(res, "resolution");
        } else {
            throw Error("unknown module '" + opt_.module + "'");
        }
    }

    DegreeVerdict d_koszul(const QuotientAlgebra& a, std::optional<std::size_t> hint) {
        auto res = resolve_top(a, opt_.n_max);
        auto v = detect_d_koszul(betti_data(res), hint);
        report_.json["betti"] = betti_json(res);
        std::string predicted = hint ? "d=" + std::to_string(*hint) : "d-Koszul";
        add(verdict_record("d-koszul", predicted, v, verdict_value(v, false)));
        return v;
    }

    void stacked(const QuotientAlgebra& a, std::optional<std::pair<std::size_t, std::size_t>> predicted) {
        auto res = resolve_top(a, opt_.n_max);
        auto v = detect_DA_stacked(betti_data(res));
        report_.json[predicted ? "stretched_betti" : "betti"] = betti_json(res);
        std::string want = predicted ? "(" + std::to_string(predicted->first) + "," + std::to_string(predicted->second) + ")"
                                     : "(D,A)-stacked";
        auto r = verdict_record("stacked", want, v, verdict_value(v, true));
        if (predicted && r.status != Status::Fail && r.computed != want) r.status = Status::Fail;
        add(std::move(r));
    }

    void stratifying() {
        const auto& sp = stretched();
        add(corner_algebra(sp, lambda()).records);
        add(dimension_report(lambda(), sp));
        add(verify_stratifying(sp));
        add(injectivity_lemma_check(sp));
    }

    void transport() {
        const auto& sp = stretched();
        auto res = resolve_top(lambda(), opt_.n_max);
        auto big = resolve_top(sp.algebra, opt_.n_max);
        report_.json["betti"] = betti_json(res);
        report_.json["stretched_betti"] = betti_json(big);
        add(verify_transport(res, lambda(), big, sp));
    }

    void bimodule() { add(verify_bimodule_formulas(stretched(), opt_.budget)); }

    void idim() {
        auto small = injective_dimension_bounded(StructuredAlgebra::from_quotient(lambda()), opt_.n_max);
        auto big = injective_dimension_bounded(StructuredAlgebra::from_quotient(stretched().algebra), opt_.n_max);
        report_.json["injective_dimension"] = {{"algebra", small.to_string()}, {"stretched", big.to_string()}};
        CheckRecord r;
        r.name = "idim";
        r.computed = big.to_string();
        using K = ProjectiveDimension::Kind;
        if (small.kind != K::Exceeds) {
            std::size_t bound = std::max<std::size_t>(small.value, 2);
            if (opt_.A == 1) bound = small.value;
            r.predicted = "<= " + std::to_string(bound);
            if (big.kind == K::Exceeds) {
                r.status = Status::UpTo;
                r.up_to = opt_.n_max;
                r.detail = "stretched algebra did not terminate";
            } else {
                r.status = big.value <= bound ? Status::Pass : Status::Fail;
            }
        } else {
            r.predicted = "<= max(idim, 2)";
            r.status = Status::UpTo;
            r.up_to = opt_.n_max;
            r.detail = "idim " + small.to_string();
        }
        add(std::move(r));
    }

    void full_report() {
        groebner_record(lambda(), "groebner.complete");
        auto v = d_koszul(lambda(), opt_.d);
        std::optional<std::pair<std::size_t, std::size_t>> want;
        if (v.ok() && v.D) want = std::make_pair(*v.D * opt_.A, opt_.A);
        if (opt_.n_max >= 3) stacked(stretched().algebra, want);
        stratifying();
        transport();
        if (opt_.A >= 2) bimodule();
        idim();
    }

    Options opt_;
    Presentation pres_;
    Report report_;
    std::shared_ptr<const QuotientAlgebra> lambda_;
    std::shared_ptr<const StretchedPresentation> sp_;
};

}  // namespace

Report run(const Options& options, std::string_view text) {
    if (options.A < 1) throw Error("--A must be at least 1");
    return Runner(options, text).run();
}

}  // namespace qstretch::cli
