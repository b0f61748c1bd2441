#include "sixterm/records_io.hpp"

#include <stdexcept>
#include <string>

namespace sixterm {

namespace {

const mpz_class& safe_limit() {
    static const mpz_class limit("9007199254740991");
    return limit;
}

template <class Array>
nlohmann::json int_array(const Array& a) {
    auto out = nlohmann::json::array();
    for (const auto& v : a) out.push_back(json_integer(mpz_class(static_cast<long>(v))));
    return out;
}

std::int64_t small_int(const nlohmann::json& j) {
    const mpz_class v = integer_from_json(j);
    if (!v.fits_slong_p()) throw std::invalid_argument("integer out of range: " + v.get_str());
    return v.get_si();
}

template <std::size_t N, class T>
std::array<T, N> fixed_array(const nlohmann::json& j, std::string_view field) {
    if (!j.is_array() || j.size() != N)
        throw std::invalid_argument(std::string(field) + " must be an array of " + std::to_string(N) + " integers");
    std::array<T, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = static_cast<T>(small_int(j[i]));
    return out;
}

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
    return j.at(name);
}

}  // namespace

nlohmann::json json_integer(const mpz_class& v) {
    if (abs(v) <= safe_limit()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        mpz_class v;
        if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("not a decimal integer: " + j.dump());
        return v;
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

nlohmann::json bounds_to_json(const BoundSet& b) {
    return {{"X", json_integer(mpz_class(static_cast<long>(b.X)))},
            {"a_cap", json_integer(mpz_class(static_cast<long>(b.a_cap)))},
            {"sporadic_caps", int_array(b.sporadic)},
            {"form1_caps", int_array(b.form1)},
            {"form2_caps", int_array(b.form2)}};
}

BoundSet bounds_from_json(const nlohmann::json& j) {
    BoundSet b;
    b.X = small_int(field(j, "X"));
    b.a_cap = small_int(field(j, "a_cap"));
    b.sporadic = fixed_array<6, unsigned>(field(j, "sporadic_caps"), "sporadic_caps");
    b.form1 = fixed_array<4, unsigned>(field(j, "form1_caps"), "form1_caps");
    b.form2 = fixed_array<5, unsigned>(field(j, "form2_caps"), "form2_caps");
    return b;
}

nlohmann::json header_record(std::string_view command, const nlohmann::json& config, const BoundSet& b) {
    return {{"kind", "header"},
            {"tool_version", std::string(kToolVersion)},
            {"command", std::string(command)},
            {"config", config},
            {"X", json_integer(mpz_class(static_cast<long>(b.X)))},
            {"bounds", bounds_to_json(b)}};
}

nlohmann::json solution_record(const SolutionRecord& r, std::int64_t X) {
    return {{"kind", "solution"},
            {"A", json_integer(mpz_class(static_cast<long>(r.A)))},
            {"X", json_integer(mpz_class(static_cast<long>(X)))},
            {"indices", int_array(r.indices)},
            {"coefficients", int_array(r.coefficients)}};
}

nlohmann::json family_record(const FamilyRecord& f, std::int64_t X) {
    return {{"kind", "family"},
            {"A", json_integer(mpz_class(static_cast<long>(f.A)))},
            {"X", json_integer(mpz_class(static_cast<long>(X)))},
            {"offsets", int_array(f.offsets)},
            {"coefficients", int_array(f.coefficients)},
            {"form", std::string(to_string(f.form))}};
}

nlohmann::json term_record(std::int64_t A, int n, const mpz_class& x, const mpz_class& y) {
    return {{"kind", "term"},
            {"A", json_integer(mpz_class(static_cast<long>(A)))},
            {"n", n},
            {"x", json_integer(x)},
            {"y", json_integer(y)}};
}

SolutionRecord solution_from_json(const nlohmann::json& j) {
    SolutionRecord r;
    r.A = small_int(field(j, "A"));
    r.indices = fixed_array<6, int>(field(j, "indices"), "indices");
    r.coefficients = fixed_array<6, std::int64_t>(field(j, "coefficients"), "coefficients");
    return r;
}

FamilyRecord family_from_json(const nlohmann::json& j) {
    FamilyRecord f;
    f.A = small_int(field(j, "A"));
    const auto& offsets = field(j, "offsets");
    const auto& coeffs = field(j, "coefficients");
    if (!offsets.is_array() || !coeffs.is_array()) throw std::invalid_argument("offsets/coefficients must be arrays");
    for (const auto& o : offsets) {
        const auto v = small_int(o);
        if (v < 0) throw std::invalid_argument("offsets must be non-negative");
        f.offsets.push_back(static_cast<unsigned>(v));
    }
    for (const auto& c : coeffs) f.coefficients.push_back(small_int(c));
    f.form = form_for_terms(f.coefficients.size());
    if (j.contains("form") && j.at("form") != std::string(to_string(f.form)))
        throw std::invalid_argument("form tag does not match the number of terms");
    return f;
}

std::string to_line(const nlohmann::json& j) { return j.dump(); }

}  // namespace sixterm
