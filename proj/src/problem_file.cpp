#include <adm/problem_file.hpp>

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <ios>
#include <limits>
#include <sstream>
#include <string_view>

namespace adm {

using nlohmann::json;

namespace {

std::string index_path(const std::string& base, std::size_t i)
{
    return base + "[" + std::to_string(i) + "]";
}

std::string key_path(const std::string& base, std::string_view key)
{
    return base.empty() ? std::string(key) : base + "." + std::string(key);
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<std::string_view> allowed)
{
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (auto a : allowed) {
            known = known || key == a;
        }
        if (!known) {
            throw ProblemFileError(key_path(path, key), "unknown key");
        }
    }
}

const json& require(const json& obj, std::string_view key, const std::string& path)
{
    const auto it = obj.find(std::string(key));
    if (it == obj.end()) {
        throw ProblemFileError(key_path(path, key), "missing required key");
    }
    return *it;
}

double as_number(const json& v, const std::string& path)
{
    if (!v.is_number()) {
        throw ProblemFileError(path, "expected a number");
    }
    return v.get<double>();
}

unsigned as_count(const json& v, const std::string& path)
{
    if (!v.is_number_integer() || v.get<long long>() < 0
        || v.get<long long>() > std::numeric_limits<unsigned>::max()) {
        throw ProblemFileError(path, "expected a non-negative integer");
    }
    return v.get<unsigned>();
}

const json& as_array(const json& v, const std::string& path)
{
    if (!v.is_array()) {
        throw ProblemFileError(path, "expected an array");
    }
    return v;
}

std::vector<double> number_list(const json& v, const std::string& path)
{
    std::vector<double> out;
    const auto& arr = as_array(v, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out.push_back(as_number(arr[i], index_path(path, i)));
    }
    return out;
}

std::vector<BoundaryCondition> condition_list(const json& v, const std::string& path)
{
    std::vector<BoundaryCondition> out;
    const auto& arr = as_array(v, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (arr[i].is_null()) {
            continue;
        }
        out.push_back({static_cast<unsigned>(i), as_number(arr[i], index_path(path, i))});
    }
    return out;
}

ExpPolynomial exp_poly_sum(const json& v, const std::string& path)
{
    std::vector<ExpPolyTerm> terms;
    const auto& arr = as_array(v, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = index_path(path, i);
        if (!arr[i].is_object()) {
            throw ProblemFileError(p, "expected an object");
        }
        reject_unknown_keys(arr[i], p, {"poly", "exp_rate"});
        ExpPolyTerm term;
        term.poly = number_list(require(arr[i], "poly", p), key_path(p, "poly"));
        term.exp_rate = as_number(require(arr[i], "exp_rate", p), key_path(p, "exp_rate"));
        terms.push_back(std::move(term));
    }
    return ExpPolynomial(std::move(terms));
}

json exp_poly_json(const ExpPolynomial& f)
{
    json arr = json::array();
    for (const auto& t : f.terms()) {
        arr.push_back({{"poly", t.poly}, {"exp_rate", t.exp_rate}});
    }
    return arr;
}

json condition_json(const std::vector<BoundaryCondition>& block)
{
    json arr = json::array();
    for (const auto& c : block) {
        while (arr.size() < c.derivative_order) {
            arr.push_back(nullptr);
        }
        arr.push_back(c.value);
    }
    return arr;
}

ProblemSpec parse_document(const json& doc, std::size_t m)
{
    if (!doc.is_object()) {
        throw ProblemFileError("", "problem document must be a JSON object");
    }
    reject_unknown_keys(doc, "",
                        {"name", "order", "b", "left", "right", "phi", "psi", "nonlinear", "exact"});

    std::string name = "custom";
    if (const auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) {
            throw ProblemFileError("name", "expected a string");
        }
        name = it->get<std::string>();
    }
    unsigned order = 7;
    if (const auto it = doc.find("order"); it != doc.end()) {
        order = as_count(*it, "order");
    }

    BoundaryConditions bc;
    bc.b = as_number(require(doc, "b", ""), "b");
    bc.left = condition_list(require(doc, "left", ""), "left");
    bc.right = condition_list(require(doc, "right", ""), "right");

    const auto optional_sum = [&](std::string_view key) {
        const auto it = doc.find(std::string(key));
        return it == doc.end() ? ExpPolynomial{} : exp_poly_sum(*it, std::string(key));
    };

    std::vector<NonlinearTerm> nonlinear;
    if (const auto it = doc.find("nonlinear"); it != doc.end()) {
        const auto& arr = as_array(*it, "nonlinear");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string p = index_path("nonlinear", i);
            const json& e = arr[i];
            if (!e.is_object()) {
                throw ProblemFileError(p, "expected an object");
            }
            reject_unknown_keys(
                e, p, {"weight_poly", "weight_exp_rate", "u_power", "du_power", "coefficient"});
            Monomial mono;
            mono.u_power = as_count(require(e, "u_power", p), key_path(p, "u_power"));
            mono.du_power = as_count(require(e, "du_power", p), key_path(p, "du_power"));
            mono.coefficient = 1.0;
            if (const auto c = e.find("coefficient"); c != e.end()) {
                mono.coefficient = as_number(*c, key_path(p, "coefficient"));
            }
            if (mono.u_power + mono.du_power == 0) {
                throw ProblemFileError(p, "u_power + du_power must be at least 1");
            }
            ExpPolyTerm weight;
            weight.poly = number_list(require(e, "weight_poly", p), key_path(p, "weight_poly"));
            weight.exp_rate =
                as_number(require(e, "weight_exp_rate", p), key_path(p, "weight_exp_rate"));
            nonlinear.push_back(
                NonlinearTerm::from_form({mono}, ExpPolynomial({std::move(weight)}), m));
        }
    }

    std::optional<ExpPolynomial> exact;
    if (const auto it = doc.find("exact"); it != doc.end()) {
        exact = exp_poly_sum(*it, "exact");
    }

    ProblemSpec spec = make_problem(std::move(name), order, optional_sum("phi"), optional_sum("psi"),
                                    std::move(nonlinear), std::move(bc), std::move(exact), m);
    validate(spec);
    return spec;
}

} // namespace

ProblemFileError::ProblemFileError(std::string field, const std::string& message)
    : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field))
{
}

ProblemSpec parse_problem_string(const std::string& text, std::size_t truncation_order)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ProblemFileError("", std::string("malformed JSON: ") + e.what());
    }
    return parse_document(doc, truncation_order);
}

ProblemSpec parse_problem_file(const std::filesystem::path& path, std::size_t truncation_order)
{
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open problem file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_string(buf.str(), truncation_order);
}

std::string serialize_problem(const ProblemSpec& spec)
{
    if (!spec.phi_form || !spec.psi_form) {
        throw std::invalid_argument("serialize_problem: phi/psi closed forms are required");
    }
    json doc;
    doc["name"] = spec.name;
    doc["order"] = spec.order;
    doc["b"] = spec.bc.b;
    doc["left"] = condition_json(spec.bc.left);
    doc["right"] = condition_json(spec.bc.right);
    doc["phi"] = exp_poly_json(*spec.phi_form);
    doc["psi"] = exp_poly_json(*spec.psi_form);

    json nl = json::array();
    for (const auto& term : spec.nonlinear) {
        if (!term.weight_form() || term.weight_form()->terms().size() != 1) {
            throw std::invalid_argument(
                "serialize_problem: nonlinear weights must be a single poly * exp term");
        }
        const auto& w = term.weight_form()->terms().front();
        for (const auto& mono : term.monomials()) {
            nl.push_back({{"weight_poly", w.poly},
                          {"weight_exp_rate", w.exp_rate},
                          {"u_power", mono.u_power},
                          {"du_power", mono.du_power},
                          {"coefficient", mono.coefficient}});
        }
    }
    doc["nonlinear"] = std::move(nl);
    if (spec.exact) {
        doc["exact"] = exp_poly_json(*spec.exact);
    }
    return doc.dump(2);
}

} // namespace adm
