#include "latexp/lattice_io.hpp"

#include <fstream>

#include "latexp/errors.hpp"

namespace latexp {

Json field_to_json(const FieldPtr& f) {
    Json j;
    Json mp = Json::array();
    for (const auto& c : f->minpoly()) {
        if (!c.fits_slong_p()) throw input_error("minimal polynomial coefficient too large");
        mp.push_back(c.get_si());
    }
    j["minpoly"] = mp;
    j["root_interval"] = Json::array({rational_string(f->given_lo()), rational_string(f->given_hi())});
    return j;
}

FieldPtr field_from_json(const Json& j) {
    if (!j.contains("minpoly") || !j.contains("root_interval"))
        throw input_error("field fragment needs 'minpoly' and 'root_interval'");
    poly::ZPoly mp;
    for (const auto& c : j.at("minpoly")) {
        if (!c.is_number_integer()) throw input_error("minpoly coefficients must be integers");
        mp.push_back(Int(static_cast<long>(c.get<long long>())));
    }
    const auto& iv = j.at("root_interval");
    if (!iv.is_array() || iv.size() != 2) throw input_error("root_interval must be a pair");
    Rat lo = parse_rational(iv[0].get<std::string>());
    Rat hi = parse_rational(iv[1].get<std::string>());
    return NumberField::create(mp, lo, hi);
}

Json element_to_json(const FieldElement& e) {
    Json j = Json::array();
    for (const auto& c : e.coords()) j.push_back(rational_string(c));
    return j;
}

FieldElement element_from_json(const FieldPtr& f, const Json& j) {
    if (!j.is_array() || static_cast<int>(j.size()) != f->degree())
        throw input_error("field element must be an array of length equal to the degree");
    std::vector<Rat> c;
    for (const auto& v : j) c.push_back(parse_rational(v.get<std::string>()));
    return FieldElement(f, std::move(c));
}

Json lattice_to_json(const Lattice& lat) {
    Json j;
    j["dim"] = lat.dim();
    if (const auto* nf = lat.norm_forms()) {
        j["kind"] = "norm_form";
        j["field"] = field_to_json(nf->field());
        Json coeffs = Json::array();
        for (const auto& row : nf->coeffs()) {
            Json r = Json::array();
            for (const auto& v : row) r.push_back(rational_string(v));
            coeffs.push_back(r);
        }
        j["coeffs"] = coeffs;
    } else {
        const auto* ff = lat.field_forms();
        j["field"] = field_to_json(ff->field());
        Json rows = Json::array();
        for (const auto& row : ff->rows()) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(element_to_json(e));
            rows.push_back(r);
        }
        j["rows"] = rows;
    }
    j["scale"] = rational_string(lat.scale());
    if (lat.unit_det()) j["unit_det"] = true;
    return j;
}

Lattice lattice_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("field"))
        throw input_error("lattice file needs 'dim' and 'field'");
    int d = j.at("dim").get<int>();
    FieldPtr f = field_from_json(j.at("field"));
    Rat scale(1);
    if (j.contains("scale")) scale = parse_rational(j.at("scale").get<std::string>());
    bool unit_det = j.value("unit_det", false);
    std::string kind = j.value("kind", "forms");
    if (kind == "norm_form") {
        if (!j.contains("coeffs")) throw input_error("norm_form lattice needs 'coeffs'");
        const auto& cj = j.at("coeffs");
        if (static_cast<int>(cj.size()) != d) throw input_error("coeffs row count mismatch");
        QMatrix coeffs;
        for (const auto& row : cj) {
            if (static_cast<int>(row.size()) != d) throw input_error("coeffs column count mismatch");
            std::vector<Rat> r;
            for (const auto& v : row) r.push_back(parse_rational(v.get<std::string>()));
            coeffs.push_back(std::move(r));
        }
        return Lattice(Lattice::FormsVariant(NormForms(f, std::move(coeffs))), scale, unit_det);
    }
    if (!j.contains("rows")) throw input_error("lattice file needs 'rows'");
    const auto& rj = j.at("rows");
    if (static_cast<int>(rj.size()) != d) throw input_error("rows count must equal dim");
    FMatrix rows;
    for (const auto& row : rj) {
        if (static_cast<int>(row.size()) != d) throw input_error("row length must equal dim");
        FRow r;
        for (const auto& e : row) r.push_back(element_from_json(f, e));
        rows.push_back(std::move(r));
    }
    return Lattice(Lattice::FormsVariant(FieldForms(f, std::move(rows))), scale, unit_det);
}

Lattice load_lattice(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open lattice file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return lattice_from_json(j);
}

void save_lattice(const std::string& path, const Lattice& lat) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write lattice file: " + path);
    out << lattice_to_json(lat).dump(2) << "\n";
}

Json report_to_json(const HypothesisReport& rep) {
    Json j;
    j["hypothesis"] = rep.hypothesis;
    j["pass"] = rep.passed();
    Json clauses = Json::array();
    for (const auto& c : rep.clauses) {
        Json cj;
        cj["description"] = c.description;
        cj["pass"] = c.pass;
        if (!c.certificate.empty()) cj["certificate"] = c.certificate;
        clauses.push_back(cj);
    }
    j["clauses"] = clauses;
    return j;
}

}  // namespace latexp
