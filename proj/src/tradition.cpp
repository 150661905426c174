#include "tibcal/tradition.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tibcal {

namespace {

TraditionConfig standard(const std::string& id, const std::string& epoch, long Y0) {
    TraditionConfig c;
    c.id = id;
    c.epoch = epoch;
    c.Y0 = Y0;
    c.m1 = rat(167025, 5656);
    c.s1 = rat(65, 804);
    c.a1 = rat(253, 3528);
    c.m2 = c.m1 / 30;
    c.s2 = c.s1 / 30;
    c.a2 = rat(1, 28);
    return c;
}

void finish(TraditionConfig& c) { c.epoch_jd = floor_long(c.m0); }

TraditionConfig phugpa806() {
    auto c = standard("phugpa", "E806", 806);
    c.m0 = 2015501 + rat(4783, 5656);
    c.s0 = rat(743, 804);
    c.a0 = rat(475, 3528);
    c.beta_x = 61;
    c.beta = 123;
    c.leap_window = {48, 49};
    c.gamma = 42;
    c.gamma_x = 33;
    c.p1 = rat(77, 90);
    c.rahu_rd0 = 121;
    finish(c);
    return c;
}

TraditionConfig tsurphu1732() {
    auto c = standard("tsurphu", "E1732", 1732);
    c.m0 = 2353745 + rat(1795153, 7635600);
    c.s0 = rat(-5983, 108540);
    c.a0 = rat(207, 392);
    c.beta_x = 59;
    c.beta = 142;
    c.leap_window = {0, 1};
    c.gamma = 55;
    c.gamma_x = 20;
    c.p1 = rat(307, 360);
    finish(c);
    return c;
}

TraditionConfig build(const std::string& id, const std::string& epoch) {
    if (id == "phugpa") {
        if (epoch == "E806") return phugpa806();
        if (epoch == "E1927") {
            auto c = standard("phugpa", "E1927", 1927);
            c.m0 = 2424972 + rat(5457, 5656);
            c.s0 = rat(749, 804);
            c.a0 = rat(1741, 3528);
            c.beta_x = 55;
            c.beta = 129;
            c.leap_window = {48, 49};
            c.gamma = 42;
            c.gamma_x = 33;
            c.p1 = rat(77, 90);
            c.rahu_rd0 = 187;
            finish(c);
            return c;
        }
        if (epoch == "E1987") {
            auto c = standard("phugpa", "E1987", 1987);
            c.m0 = 2446914 + rat(135, 707);
            c.s0 = 0;
            c.a0 = rat(38, 49);
            c.beta_x = 0;
            c.beta = 184;
            c.leap_window = {48, 49};
            c.gamma = 42;
            c.gamma_x = 33;
            c.p1 = rat(77, 90);
            c.rahu_rd0 = 10;
            finish(c);
            return c;
        }
    } else if (id == "tsurphu") {
        if (epoch == "E1732") return tsurphu1732();
        if (epoch == "E1852") {
            auto c = standard("tsurphu", "E1852", 1852);
            c.m0 = 2397598 + rat(1197103, 7635600);
            c.s0 = rat(23, 27135);
            c.a0 = rat(1, 49);
            c.beta_x = 14;
            c.beta = 187;
            c.leap_window = {0, 1};
            c.gamma = 55;
            c.gamma_x = 20;
            c.p1 = rat(307, 360);
            finish(c);
            return c;
        }
    } else if (id == "mongolia") {
        if (epoch == "E1747") {
            auto c = standard("mongolia", "E1747", 1747);
            c.m0 = 2359237 + rat(2603, 2828);
            c.s0 = rat(397, 402);
            c.a0 = rat(1523, 1764);
            c.beta_x = 10;
            c.beta = 172;
            c.leap_window = {46, 47};
            c.gamma = 55;
            c.gamma_x = 20;
            c.p1 = rat(463, 540);
            finish(c);
            return c;
        }
    } else if (id == "bhutan") {
        if (epoch == "E1754") {
            auto c = standard("bhutan", "E1754", 1754);
            c.m0 = 2361807 + rat(52, 707);
            c.s0 = rat(1, 67);
            c.a0 = rat(17, 147);
            c.beta_x = 2;
            c.beta = 191;
            c.leap_window = {59, 60};
            c.numbering = LeapNumbering::follows_previous;
            c.gamma = 12;
            c.gamma_x = 28;
            c.p1 = rat(103, 120);
            c.weekday_name_offset = 1;
            finish(c);
            return c;
        }
    } else if (id == "karana") {
        if (epoch == "E806") {
            auto c = standard("karana", "E806", 806);
            c.m1 = rat(10631, 360);
            c.s1 = rat(1277, 15795);
            c.m2 = c.m1 / 30;
            c.s2 = c.s1 / 30;
            c.m0 = 2015531 + rat(1, 2);
            c.s0 = rat(809, 810);
            c.a0 = rat(53, 252);
            c.beta_x = 0;
            c.beta = 199;
            c.leap_window = {65, 66};
            c.numbering = LeapNumbering::follows_previous;
            c.gamma = 28;
            c.gamma_x = 22;
            c.p1 = rat(5, 6);
            finish(c);
            return c;
        }
    } else {
        throw std::domain_error("unknown tradition: " + id);
    }
    throw std::domain_error("unknown epoch " + epoch + " for tradition " + id);
}

}  // namespace

Rational TraditionConfig::p0() const { return p1 - rat(1, 12); }

const std::vector<std::string>& tradition_ids() {
    static const std::vector<std::string> ids = {"phugpa", "tsurphu", "mongolia", "bhutan",
                                                 "karana"};
    return ids;
}

std::vector<std::string> tradition_epochs(const std::string& id) {
    if (id == "phugpa") return {"E806", "E1927", "E1987"};
    if (id == "tsurphu") return {"E1732", "E1852"};
    if (id == "mongolia") return {"E1747"};
    if (id == "bhutan") return {"E1754"};
    if (id == "karana") return {"E806"};
    throw std::domain_error("unknown tradition: " + id);
}

TraditionConfig get_tradition(const std::string& id, const std::string& epoch) {
    auto epochs = tradition_epochs(id);
    return build(id, epoch.empty() ? epochs.back() : epoch);
}

TraditionConfig shift_epoch(const TraditionConfig& cfg, long k) {
    if (k == 0) return cfg;
    // The epoch month moves by dY years; the month count and the
    // solar month count must stay related by 67 MM + beta_x = 65 n + ...
    // so beta_x' = beta_x + 804 dY - 65 k.  Pick the dY that keeps it in range.
    long dY = floor_long(rat(65 * k + 402, 804));
    long bx = 0;
    bool found = false;
    for (long cand = dY - 1; cand <= dY + 1; ++cand) {
        long v = cfg.beta_x + 804 * cand - 65 * k;
        if (v >= 0 && v < 65) {
            dY = cand;
            bx = v;
            found = true;
            break;
        }
    }
    if (!found)
        throw std::domain_error("shift by " + std::to_string(k) +
                                " months does not land on an epoch month 3");
    TraditionConfig c = cfg;
    c.Y0 = cfg.Y0 + dY;
    c.epoch = "E" + std::to_string(c.Y0);
    c.m0 = cfg.m0 + k * cfg.m1;
    c.s0 = frac(cfg.s0 + k * cfg.s1);
    c.a0 = frac(cfg.a0 + k * cfg.a1);
    c.beta_x = bx;
    c.beta = cfg.beta + 65 * k - 804 * dY;
    if (cfg.rahu_rd0) c.rahu_rd0 = mod(*cfg.rahu_rd0 + k, 230);
    c.epoch_jd = floor_long(c.m0);
    return c;
}

TraditionConfig with_exact_a2(TraditionConfig cfg) {
    cfg.a2 = (1 + cfg.a1) / 30;
    return cfg;
}

std::vector<Rational> definition_points(const TraditionConfig& cfg) {
    std::vector<Rational> p;
    for (int M = 1; M <= 12; ++M) p.push_back(cfg.p0() + rat(M, 12));
    return p;
}

Rational normalized_s0(const TraditionConfig& cfg) {
    Rational p0 = cfg.p0();
    // smallest s0 + j with s0 + j > p0, i.e. within (p0, p0 + 1]
    Rational shift = Rational(ceil(p0 - cfg.s0));
    Rational s = cfg.s0 + shift;
    if (s <= p0) s += 1;
    return s;
}

long derived_gamma(const TraditionConfig& cfg) { return mod(-cfg.Y0 - 19 * cfg.beta, 65); }

long derived_gamma_x(const TraditionConfig& cfg) { return mod(-24 * cfg.Y0 - cfg.beta, 65); }

namespace {

Rational field_rat(const nlohmann::json& j, const char* key, const Rational& fallback,
                   bool required) {
    if (!j.contains(key)) {
        if (required) throw std::invalid_argument(std::string("missing field: ") + key);
        return fallback;
    }
    const auto& v = j.at(key);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw std::invalid_argument(std::string("field must be an exact fraction string: ") + key);
}

long field_long(const nlohmann::json& j, const char* key, long fallback, bool required) {
    if (!j.contains(key)) {
        if (required) throw std::invalid_argument(std::string("missing field: ") + key);
        return fallback;
    }
    if (!j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("field must be an integer: ") + key);
    return j.at(key).get<long>();
}

}  // namespace

TraditionConfig parse_tradition_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("tradition file: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("tradition file must hold an object");
    TraditionConfig c;
    if (j.contains("base")) {
        const auto& b = j.at("base");
        std::string id = b.value("id", "");
        std::string epoch = b.value("epoch", "");
        try {
            c = get_tradition(id, epoch);
        } catch (const std::domain_error& e) {
            throw std::invalid_argument(e.what());
        }
    }
    bool need = !j.contains("base");
    c.id = j.value("id", need ? std::string("custom") : c.id);
    c.epoch = j.value("epoch", need ? std::string("custom") : c.epoch);
    c.Y0 = field_long(j, "Y0", c.Y0, need);
    c.M0 = field_long(j, "M0", need ? 3 : c.M0, false);
    c.m0 = field_rat(j, "m0", c.m0, need);
    c.m1 = field_rat(j, "m1", need ? rat(167025, 5656) : c.m1, false);
    c.s0 = field_rat(j, "s0", c.s0, need);
    c.s1 = field_rat(j, "s1", need ? rat(65, 804) : c.s1, false);
    c.a0 = field_rat(j, "a0", c.a0, need);
    c.a1 = field_rat(j, "a1", need ? rat(253, 3528) : c.a1, false);
    c.m2 = field_rat(j, "m2", c.m1 / 30, false);
    c.s2 = field_rat(j, "s2", c.s1 / 30, false);
    c.a2 = field_rat(j, "a2", need ? rat(1, 28) : c.a2, false);
    c.beta_x = field_long(j, "beta_x", c.beta_x, need);
    c.beta = field_long(j, "beta", c.beta, need);
    c.p1 = field_rat(j, "p1", c.p1, need);
    if (j.contains("leap_window")) {
        const auto& w = j.at("leap_window");
        if (!w.is_array() || w.size() != 2)
            throw std::invalid_argument("leap_window must be a pair");
        c.leap_window = {w[0].get<int>(), w[1].get<int>()};
    }
    if (j.contains("numbering")) {
        std::string n = j.at("numbering").get<std::string>();
        if (n == "follows_next")
            c.numbering = LeapNumbering::follows_next;
        else if (n == "follows_previous")
            c.numbering = LeapNumbering::follows_previous;
        else
            throw std::invalid_argument("numbering must be follows_next or follows_previous");
    }
    c.gamma = field_long(j, "gamma", derived_gamma(c), false);
    c.gamma_x = field_long(j, "gamma_x", derived_gamma_x(c), false);
    if (j.contains("rahu_rd0")) c.rahu_rd0 = field_long(j, "rahu_rd0", 0, true);
    c.weekday_name_offset = static_cast<int>(field_long(j, "weekday_name_offset",
                                                        c.weekday_name_offset, false));
    c.epoch_jd = floor_long(c.m0);
    if (c.s1 <= 0 || c.m1 <= 0) throw std::invalid_argument("mean motions must be positive");
    return c;
}

TraditionConfig load_tradition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open tradition file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_tradition_json(ss.str());
}

}  // namespace tibcal
