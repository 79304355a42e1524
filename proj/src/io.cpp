#include "hk3/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

namespace hk3::io {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& expect_array(const json& j, const std::string& path, std::size_t n)
{
    if (!j.is_array() || j.size() != n)
        throw ParseError(path + ": expected an array of length " + std::to_string(n));
    return j;
}

Integer parse_integer(const json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Integer(j.dump());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        Integer z;
        if (s.empty() || z.set_str(s, 10) != 0)
            throw ParseError(path + ": expected an integer, got \"" + s + "\"");
        return z;
    }
    throw ParseError(path + ": expected an integer");
}

template <std::size_t R, std::size_t C, class T, class F>
Mat<T, R, C> parse_matrix(const json& j, const std::string& path, F entry)
{
    expect_array(j, path, R);
    Mat<T, R, C> m;
    for (std::size_t r = 0; r < R; ++r) {
        expect_array(j[r], at(path, r), C);
        for (std::size_t c = 0; c < C; ++c)
            m(r, c) = entry(j[r][c], at(at(path, r), c));
    }
    return m;
}

template <class M, class F>
json matrix_json(const M& m, F entry)
{
    json rows = json::array();
    for (std::size_t r = 0; r < M::rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < M::cols; ++c)
            row.push_back(entry(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

} // namespace

json read_document(const std::string& arg)
{
    std::string text;
    if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else if (!arg.empty() && arg[0] == '@') {
        std::ifstream f(arg.substr(1));
        if (!f)
            throw ParseError(arg.substr(1) + ": cannot open file");
        text.assign(std::istreambuf_iterator<char>(f), {});
    } else {
        text = arg;
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("document: ") + e.what());
    }
}

Rational parse_rational(const json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Rational(parse_integer(j, path));
    if (!j.is_string())
        throw ParseError(path + ": expected a rational string \"p/q\"");
    try {
        return hk3::parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Eis parse_eis(const json& j, const std::string& path)
{
    expect_array(j, path, 2);
    return {parse_integer(j[0], at(path, 0)), parse_integer(j[1], at(path, 1))};
}

Tower parse_tower(const json& j, const std::string& path)
{
    expect_array(j, path, 4);
    return {parse_rational(j[0], at(path, 0)), parse_rational(j[1], at(path, 1)),
            parse_rational(j[2], at(path, 2)), parse_rational(j[3], at(path, 3))};
}

OrthMatrix parse_orth(const json& j, const std::string& path)
{
    return parse_matrix<6, 6, Integer>(j, path, parse_integer);
}

EisMat2 parse_eis2(const json& j, const std::string& path)
{
    return parse_matrix<2, 2, Eis>(j, path, parse_eis);
}

EisMat4 parse_eis4(const json& j, const std::string& path)
{
    return parse_matrix<4, 4, Eis>(j, path, parse_eis);
}

HermitianPoint parse_tau(const json& j, const std::string& path)
{
    return {parse_matrix<2, 2, Tower>(j, path, parse_tower)};
}

PeriodPoint parse_z(const json& j, const std::string& path)
{
    expect_array(j, path, 6);
    std::array<Tower, 6> w;
    for (std::size_t i = 0; i < 6; ++i)
        w[i] = parse_tower(j[i], at(path, i));
    return PeriodPoint::from_projective(w);
}

Lambda parse_lambda(const json& j, const std::string& path)
{
    expect_array(j, path, 5);
    Lambda l;
    for (std::size_t i = 0; i < 5; ++i)
        l[i] = parse_rational(j[i], at(path, i));
    return l;
}

json to_json(const Rational& q) { return to_string(q); }
json to_json(const Integer& z) { return to_string(z); }
json to_json(const Eis& e) { return json::array({to_string(e.a), to_string(e.b)}); }

json to_json(const Tower& t)
{
    return json::array({to_string(t.a), to_string(t.b), to_string(t.c), to_string(t.d)});
}

json to_json(const OrthMatrix& g)
{
    return matrix_json(g, [](const Integer& x) { return to_json(x); });
}

json to_json(const EisMat2& m)
{
    return matrix_json(m, [](const Eis& x) { return to_json(x); });
}

json to_json(const EisMat4& m)
{
    return matrix_json(m, [](const Eis& x) { return to_json(x); });
}

json to_json(const HermitianPoint& tau)
{
    return matrix_json(tau.tau, [](const Tower& x) { return to_json(x); });
}

json to_json(const PeriodPoint& z)
{
    json out = json::array();
    for (const auto& x : z.z)
        out.push_back(to_json(x));
    return out;
}

} // namespace hk3::io
