#include "tibcal/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tibcal/almanac.hpp"
#include "tibcal/astro.hpp"
#include "tibcal/astrology.hpp"
#include "tibcal/cycles.hpp"
#include "tibcal/days.hpp"
#include "tibcal/planets.hpp"

namespace tibcal {

namespace {

using nlohmann::ordered_json;

// One output table; cells are strings or integers.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<ordered_json>> rows;
    bool vertical = false;  // single record shown as "key: value" lines

    void add(std::vector<ordered_json> row) {
        if (row.size() != columns.size()) throw std::logic_error("row width mismatch");
        rows.push_back(std::move(row));
    }
};

std::string cell_text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

enum class Format { table, csv, jsonl };

void render(const Table& t, Format f, std::ostream& out) {
    switch (f) {
        case Format::csv: {
            for (std::size_t i = 0; i < t.columns.size(); ++i)
                out << (i ? "," : "") << csv_quote(t.columns[i]);
            out << "\n";
            for (const auto& r : t.rows) {
                for (std::size_t i = 0; i < r.size(); ++i)
                    out << (i ? "," : "") << csv_quote(cell_text(r[i]));
                out << "\n";
            }
            break;
        }
        case Format::jsonl:
            for (const auto& r : t.rows) {
                ordered_json o = ordered_json::object();
                for (std::size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = r[i];
                out << o.dump() << "\n";
            }
            break;
        case Format::table: {
            if (t.vertical) {
                std::size_t w = 0;
                for (const auto& c : t.columns) w = std::max(w, c.size());
                for (const auto& r : t.rows) {
                    for (std::size_t i = 0; i < r.size(); ++i)
                        out << t.columns[i] << std::string(w - t.columns[i].size(), ' ') << "  "
                            << cell_text(r[i]) << "\n";
                    if (&r != &t.rows.back()) out << "\n";
                }
                break;
            }
            std::vector<std::size_t> w(t.columns.size());
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = t.columns[i].size();
            for (const auto& r : t.rows)
                for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], cell_text(r[i]).size());
            auto line = [&](const std::vector<std::string>& cells) {
                std::string s;
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    s += cells[i];
                    if (i + 1 < cells.size()) s += std::string(w[i] - cells[i].size() + 2, ' ');
                }
                out << s << "\n";
            };
            line(t.columns);
            std::vector<std::string> rule;
            for (auto x : w) rule.push_back(std::string(x, '-'));
            line(rule);
            for (const auto& r : t.rows) {
                std::vector<std::string> cells;
                for (const auto& c : r) cells.push_back(cell_text(c));
                line(cells);
            }
            break;
        }
    }
}

// Longitude in mansions, 3 terms of <27,60,60,6,67>.
std::string mansions(const Rational& x) {
    return to_mixed_radix(27 * x, {60, 60, 6, 67}).str(3);
}

// Mean sun in signs;degrees,minutes.
std::string signs(const Rational& x) { return to_mixed_radix(12 * x, {30, 60}).str(); }

std::string ddmm(const CivilDate& c) {
    return std::to_string(c.day) + "/" + std::to_string(c.month);
}

std::pair<long, long> parse_year_range(const std::string& s) {
    static const std::regex re(R"(^(-?\d+)(?:\.\.(-?\d+))?$)");
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw std::invalid_argument("malformed year range: " + s + " (expected Y or Y1..Y2)");
    long a = std::stol(m[1]);
    long b = m[2].matched ? std::stol(m[2]) : a;
    if (a > b) throw std::invalid_argument("empty year range: " + s);
    return {a, b};
}

long parse_civil(const std::string& s, bool gregorian) {
    static const std::regex re(R"(^(-?\d+)-(\d{1,2})-(\d{1,2})$)");
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw std::invalid_argument("malformed date: " + s + " (expected YYYY-MM-DD)");
    long y = std::stol(m[1]);
    int mo = std::stoi(m[2]), d = std::stoi(m[3]);
    if (gregorian) {
        using namespace std::chrono;
        year_month_day ymd{year{static_cast<int>(y)}, month{static_cast<unsigned>(mo)},
                           day{static_cast<unsigned>(d)}};
        if (!ymd.ok()) throw std::invalid_argument("no such Gregorian date: " + s);
        return jd_from_gregorian(y, mo, d);
    }
    long jd = jd_from_julian(y, mo, d);
    CivilDate back = julian_from_jd(jd);
    if (back.year != y || back.month != mo || back.day != d)
        throw std::invalid_argument("no such Julian date: " + s);
    return jd;
}

std::pair<long, long> parse_date_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        long jd = parse_civil(s, true);
        return {jd, jd};
    }
    long a = parse_civil(s.substr(0, dots), true), b = parse_civil(s.substr(dots + 2), true);
    if (a > b) throw std::invalid_argument("empty date range: " + s);
    return {a, b};
}

struct Options {
    std::string tradition = "phugpa";
    std::string epoch;
    std::string tradition_file;
    bool a2_exact = false;
    std::string format = "table";
};

// An unknown tradition name is a usage error on the command line.
TraditionConfig named_tradition(const std::string& id, const std::string& epoch = "") {
    try {
        return get_tradition(id, epoch);
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(e.what());
    }
}

TraditionConfig select(const Options& o) {
    TraditionConfig cfg = o.tradition_file.empty() ? named_tradition(o.tradition, o.epoch)
                                                   : load_tradition_file(o.tradition_file);
    if (o.a2_exact) cfg = with_exact_a2(cfg);
    return cfg;
}

Format format_of(const Options& o) {
    if (o.format == "csv") return Format::csv;
    if (o.format == "jsonl") return Format::jsonl;
    return Format::table;
}

// Exactly one date input.
struct DateInput {
    std::string gregorian, julian, tibetan;
    std::optional<long> jd;

    void add_to(CLI::App* app) {
        auto* g = app->add_option("--gregorian,-g", gregorian, "Gregorian date YYYY-MM-DD");
        auto* j = app->add_option("--julian", julian, "Julian calendar date YYYY-MM-DD");
        auto* n = app->add_option("--jd", jd, "Julian day number");
        auto* t = app->add_option("--tibetan,-t", tibetan, "Tibetan date YYYY-MM[L]-DD[a|b]");
        g->excludes(j)->excludes(n)->excludes(t);
        j->excludes(n)->excludes(t);
        n->excludes(t);
    }
    bool given() const {
        return !gregorian.empty() || !julian.empty() || !tibetan.empty() || jd.has_value();
    }
};

std::string gender_name(Gender g) { return g == Gender::male ? "male" : "female"; }

int cmd_convert(const Options& o, const DateInput& in, std::ostream& out, std::ostream& err) {
    if (!in.given()) throw std::invalid_argument("convert needs one date input");
    TraditionConfig cfg = select(o);
    long jd;
    DayStatus status;
    TibetanDate tib;
    bool skipped_input = false;
    if (!in.tibetan.empty()) {
        tib = parse_tibetan_date(in.tibetan);
        DayResult r = jd_from_tibetan(cfg, tib);
        jd = r.jd;
        status = r.status;
        skipped_input = status == DayStatus::skipped;
    } else {
        jd = in.jd ? *in.jd : !in.gregorian.empty() ? parse_civil(in.gregorian, true)
                                                    : parse_civil(in.julian, false);
        tib = tibetan_from_jd(cfg, jd);
        status = day_status(cfg, month_count(cfg, tib.month), tib.day);
    }
    Weekday wd = weekday(cfg, jd);
    YearName yn = year_name(tib.month.year);
    Table t;
    t.vertical = true;
    t.columns = {"tradition", "jd", "gregorian", "julian", "tibetan", "status",
                 "weekday", "weekday_tibetan", "year_name", "prabhava"};
    t.add({cfg.name(), jd, gregorian_from_jd(jd).str(), julian_from_jd(jd).str(),
           tib.str(status), status_name(status), wd.english, wd.tibetan, yn.label(),
           std::string(yn.prabhava.sanskrit)});
    render(t, format_of(o), out);
    if (skipped_input) {
        err << "error: " << tib.str() << " is skipped; its lunar day ends on JD " << jd
            << ", a day already labelled with the preceding date\n";
        return kExitDomain;
    }
    return kExitOk;
}

int cmd_losar(const Options& o, const std::string& range, std::ostream& out) {
    auto [a, b] = parse_year_range(range);
    TraditionConfig cfg = select(o);
    Table t;
    t.columns = {"year", "jd", "gregorian", "weekday", "year_name", "days"};
    for (long Y = a; Y <= b; ++Y) {
        long jd = losar(cfg, Y);
        t.add({Y, jd, civil_from_jd(jd).str(), weekday(cfg, jd).english, year_name(Y).label(),
               year_length(cfg, Y)});
    }
    render(t, format_of(o), out);
    return kExitOk;
}

int cmd_leap(const Options& o, const std::string& range, std::ostream& out) {
    auto [a, b] = parse_year_range(range);
    TraditionConfig cfg = select(o);
    Table t;
    t.columns = {"year", "leap_month", "first_day", "last_day"};
    for (long Y = a; Y <= b; ++Y) {
        for (int M = 1; M <= 12; ++M) {
            if (!is_leap_month(cfg, Y, M)) continue;
            auto [f, l] = month_bounds(cfg, MonthLabel{Y, M, true});
            t.add({Y, M, civil_from_jd(f).str(), civil_from_jd(l).str()});
        }
    }
    render(t, format_of(o), out);
    return kExitOk;
}

std::vector<MonthLabel> months_of_year(const TraditionConfig& cfg, long Y) {
    std::vector<MonthLabel> out;
    for (long n = first_month_count(cfg, Y); n < first_month_count(cfg, Y + 1); ++n)
        out.push_back(month_from_count(cfg, n));
    return out;
}

Table header_table(const TraditionConfig& cfg, const std::vector<MonthLabel>& months) {
    Table t;
    t.columns = {"month", "true_month", "ix", "mean_date", "mean_sun", "anomaly",
                 "karana_month", "karana_true_month", "karana_ix", "karana_mean_date",
                 "karana_mean_sun", "karana_anomaly"};
    auto five = [](const Rational& x, std::vector<long> r) { return to_mixed_radix(x, r).str(); };
    for (const auto& m : months) {
        MonthHeader h = month_header(cfg, m);
        t.add({m.str(), h.true_month.n, h.true_month.ix,
               five(h.mean_date, {60, 60, 6, 707}), five(27 * h.mean_sun, {60, 60, 6, 67}),
               five(28 * h.anomaly, {126}), h.karana_label.str(), h.karana_true_month.n,
               h.karana_true_month.ix, five(h.karana_mean_date, {60, 60, 6, 707}),
               five(27 * h.karana_mean_sun, {60, 60, 6, 67}), five(28 * h.karana_anomaly, {126})});
    }
    return t;
}

Table day_table(const TraditionConfig& cfg, const std::vector<MonthLabel>& months) {
    Table t;
    t.columns = {"jd", "gregorian", "tibetan", "status", "true_weekday", "weekday",
                 "moon_lunar_day", "moon", "mansion", "mansion_name", "true_sun",
                 "yoga_long", "yoga", "yoga_name", "karana", "karana_name", "mean_sun",
                 "karana_moon"};
    for (const auto& m : months) {
        for (const auto& r : month_records(cfg, m)) {
            t.add({r.jd, r.civil.str(), r.date.str(r.status), status_name(r.status),
                   r.true_weekday_str(), weekday(cfg, r.jd).english,
                   mansions(r.moon_long_lunar_day_end), mansions(r.moon_long_day_start),
                   r.mansion, mansion_names()[r.mansion].sanskrit, mansions(r.true_sun),
                   mansions(r.yoga_longitude), r.yoga, yoga_names()[r.yoga].sanskrit,
                   r.karana.half_day, r.karana.name->sanskrit,
                   r.mean_sun ? ordered_json(signs(*r.mean_sun)) : ordered_json(""),
                   mansions(r.karana_system_moon_long)});
        }
    }
    return t;
}

int cmd_almanac(const Options& o, long Y, std::optional<int> month, bool leap, bool headers,
                std::ostream& out) {
    TraditionConfig cfg = select(o);
    std::vector<MonthLabel> months;
    if (month) {
        if (*month < 1 || *month > 12) throw std::invalid_argument("month must be 1..12");
        MonthLabel m{Y, *month, leap};
        true_month(cfg, m);  // rejects a leap month that does not exist
        months.push_back(m);
    } else {
        months = months_of_year(cfg, Y);
    }
    Format f = format_of(o);
    if (f == Format::table) {
        out << cfg.name() << " almanac " << Y << "\n\n";
        render(header_table(cfg, months), f, out);
        out << "\n";
        render(day_table(cfg, months), f, out);
    } else {
        render(headers ? header_table(cfg, months) : day_table(cfg, months), f, out);
    }
    return kExitOk;
}

int cmd_special(const Options& o, long Y, const std::vector<long>& extra, bool traditional,
                std::ostream& out) {
    TraditionConfig cfg = select(o);
    std::vector<SpecialDay> days =
        traditional ? special_days_traditional(cfg, Y) : special_days(cfg, Y, extra);
    if (!traditional) days.push_back(true_sun_zero(cfg, Y));
    std::stable_sort(days.begin(), days.end(), [](const SpecialDay& a, const SpecialDay& b) {
        return a.lunar_days < b.lunar_days;
    });
    Table t;
    t.columns = {"kind", "longitude_deg", "longitude", "month", "lunar_date", "date",
                 "date_exact", "jd", "gregorian"};
    for (const auto& s : days) {
        Rational deg = 360 * s.longitude;
        t.add({special_kind_name(s.kind), to_decimal(deg, 4), mansions(s.longitude), s.month.str(),
               to_mixed_radix(s.lunar_date, {60, 60, 6, 707}).str(), to_mixed_radix(s.date, {60, 60, 6, 707}).str(),
               to_string(s.date), s.jd, civil_from_jd(s.jd).str()});
    }
    render(t, format_of(o), out);
    return kExitOk;
}

int cmd_planets(const Options& o, const std::string& range, const std::string& detail,
                std::ostream& out) {
    auto [a, b] = parse_date_range(range);
    Table t;
    if (!detail.empty()) {
        PlanetSpec spec = planet_spec(parse_planet(detail));
        t.columns = {"jd", "gregorian", "general_day", "particular_day", "mean_helio",
                     "mean_solar", "mean_slow", "step", "anomaly", "equ", "true_slow", "diff",
                     "corr", "fast"};
        for (long jd = a; jd <= b; ++jd) {
            PlanetPosition p = planet_position(spec, general_day(jd));
            t.add({jd, civil_from_jd(jd).str(), p.general_day, p.particular_day,
                   to_string(p.mean_helio), to_string(p.mean_solar), to_string(p.mean_slow),
                   to_string(p.step), to_string(p.anomaly), to_string(p.equ),
                   to_string(p.true_slow), to_string(p.diff), to_string(p.corr), to_string(p.fast)});
        }
        render(t, format_of(o), out);
        return kExitOk;
    }
    TraditionConfig cfg = select(o);
    t.columns = {"jd", "gregorian"};
    for (Planet p : planets()) t.columns.push_back(planet_spec(p).name);
    t.columns.push_back("rahu_head");
    t.columns.push_back("rahu_tail");
    for (long jd = a; jd <= b; ++jd) {
        std::vector<ordered_json> row{jd, civil_from_jd(jd).str()};
        for (Planet p : planets()) {
            PlanetSpec s = planet_spec(p);
            Rational fast = planet_position(s, general_day(jd)).fast;
            row.push_back(to_mixed_radix(27 * fast, {60, 60, 6, s.r}).str());
        }
        if (cfg.rahu_rd0) {
            RahuPosition r = rahu(cfg, tibetan_from_jd(cfg, jd));
            row.push_back(to_mixed_radix(27 * r.head, {60, 60, 6, 23}).str());
            row.push_back(to_mixed_radix(27 * r.tail, {60, 60, 6, 23}).str());
        } else {
            row.push_back("");
            row.push_back("");
        }
        t.add(row);
    }
    render(t, format_of(o), out);
    return kExitOk;
}

int cmd_attributes(const Options& o, const DateInput& in, bool colours, std::ostream& out) {
    if (!in.given()) throw std::invalid_argument("attributes needs one date input");
    TraditionConfig cfg = select(o);
    long jd;
    if (!in.tibetan.empty()) {
        jd = jd_from_tibetan(cfg, parse_tibetan_date(in.tibetan)).jd;
    } else {
        jd = in.jd ? *in.jd : !in.gregorian.empty() ? parse_civil(in.gregorian, true)
                                                    : parse_civil(in.julian, false);
    }
    auto ename = [&](Element e) { return std::string(colours ? element_colour(e) : element_name(e)); };
    TibetanDate tib = tibetan_from_jd(cfg, jd);
    long Y = tib.month.year;
    int M = tib.month.month;
    AttributeStyle style = attribute_style(cfg);
    ElementSet ye = year_elements(Y);
    YearNumbers yn = year_numbers(Y);
    MonthAttributes ma = month_attributes(style, Y, M);
    LunarDayAttributes la = lunar_day_attributes(style, Y, M, tib.day);
    CalendarDayAttributes ca = calendar_day_attributes(jd);
    AlmanacDayRecord rec = day_record(cfg, jd);
    int wd = day_of_week(jd);
    ElementalYoga ey = elemental_yoga(wd, rec.mansion);
    YearName name = year_name(Y);

    Table t;
    t.vertical = true;
    t.columns = {"tradition", "jd", "gregorian", "tibetan", "year_name",
                 "year_power", "year_life", "year_body", "year_fortune", "year_spirit",
                 "year_central_number", "year_life_number", "year_power_number",
                 "month_animal", "month_gender", "month_element", "month_number",
                 "lunar_day_animal", "lunar_day_element", "lunar_day_trigram", "lunar_day_number",
                 "day_element", "day_gender", "day_animal", "day_trigram", "day_number",
                 "day_life", "day_body", "day_fortune", "day_spirit",
                 "weekday", "weekday_element", "mansion", "mansion_element", "elemental_yoga"};
    t.add({cfg.name(), jd, civil_from_jd(jd).str(), tib.str(rec.status), name.label(),
           ename(ye.power), ename(ye.life), ename(ye.body), ename(ye.fortune), ename(ye.spirit),
           yn.central, yn.life, yn.power,
           animal_name(ma.animal), gender_name(ma.gender), ename(ma.element),
           ma.nine_number ? ordered_json(ma.nine_number) : ordered_json(""),
           animal_name(la.animal), ename(la.element), trigram(la.trigram).tibetan, la.nine_number,
           ename(ca.element), gender_name(ca.gender), animal_name(ca.animal),
           trigram(ca.trigram).tibetan, ca.nine_number,
           ename(ca.elements.life), ename(ca.elements.body), ename(ca.elements.fortune),
           ename(ca.elements.spirit),
           weekday(cfg, jd).english, weekday_element(wd), mansion_names()[rec.mansion].sanskrit,
           mansion_elements()[rec.mansion], ey.name()});
    render(t, format_of(o), out);
    return kExitOk;
}

std::vector<int> days_with(const TraditionConfig& cfg, long n, DayStatus s) {
    std::vector<int> out;
    for (int D = 1; D <= 30; ++D)
        if (day_status(cfg, n, D) == s) out.push_back(D);
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

int cmd_compare(const Options& o, const std::string& traditions, const std::string& range,
                const std::string& what, std::ostream& out) {
    auto [a, b] = parse_year_range(range);
    std::vector<TraditionConfig> cfgs;
    std::stringstream ss(traditions);
    for (std::string id; std::getline(ss, id, ',');) {
        TraditionConfig c = named_tradition(id);
        cfgs.push_back(o.a2_exact ? with_exact_a2(c) : c);
    }
    if (cfgs.empty()) throw std::invalid_argument("no traditions given");
    Format f = format_of(o);
    bool all = what == "all";

    if (all || what == "losar") {
        Table t;
        t.columns = {"year"};
        for (const auto& c : cfgs) t.columns.push_back(c.id);
        t.columns.push_back("differs");
        for (long Y = a; Y <= b; ++Y) {
            std::vector<ordered_json> row{Y};
            std::vector<long> jds;
            for (const auto& c : cfgs) {
                jds.push_back(losar(c, Y));
                row.push_back(ddmm(civil_from_jd(jds.back())));
            }
            bool differs = std::adjacent_find(jds.begin(), jds.end(), std::not_equal_to<>()) != jds.end();
            row.push_back(differs ? "*" : "");
            t.add(row);
        }
        if (f == Format::table) out << "New Year\n";
        render(t, f, out);
        if (f == Format::table && all) out << "\n";
    }
    if (all || what == "leap") {
        Table t;
        t.columns = {"year"};
        for (const auto& c : cfgs) t.columns.push_back(c.id);
        for (long Y = a; Y <= b; ++Y) {
            std::vector<ordered_json> row{Y};
            bool any = false;
            for (const auto& c : cfgs) {
                std::string m;
                for (int M = 1; M <= 12; ++M)
                    if (is_leap_month(c, Y, M)) m = std::to_string(M);
                any = any || !m.empty();
                row.push_back(m);
            }
            if (any) t.add(row);
        }
        if (f == Format::table) out << "Leap months\n";
        render(t, f, out);
        if (f == Format::table && all) out << "\n";
    }
    if (all || what == "days") {
        Table t;
        t.columns = {"month", "tradition", "repeated", "skipped"};
        for (long Y = a; Y <= b; ++Y) {
            for (int M = 1; M <= 12; ++M) {
                for (bool leap : {true, false}) {
                    for (const auto& c : cfgs) {
                        if (leap && !is_leap_month(c, Y, M)) continue;
                        long n = month_count(c, MonthLabel{Y, M, leap});
                        t.add({MonthLabel{Y, M, leap}.str(), c.id,
                               join(days_with(c, n, DayStatus::repeated)),
                               join(days_with(c, n, DayStatus::skipped))});
                    }
                }
            }
        }
        if (f == Format::table) out << "Repeated and skipped days\n";
        render(t, f, out);
    }
    if (!all && what != "losar" && what != "leap" && what != "days")
        throw std::invalid_argument("--show must be all, losar, leap or days");
    return kExitOk;
}

int cmd_tables(const Options& o, std::ostream& out) {
    Table t;
    t.columns = {"table", "key", "value"};
    for (const auto& id : tradition_ids()) {
        for (const auto& ep : tradition_epochs(id)) {
            TraditionConfig c = get_tradition(id, ep);
            std::string name = "tradition " + c.name();
            auto put = [&](const std::string& k, ordered_json v) { t.add({name, k, std::move(v)}); };
            put("epoch_jd", c.epoch_jd);
            put("Y0", c.Y0);
            put("M0", c.M0);
            for (auto [k, v] : std::initializer_list<std::pair<const char*, const Rational*>>{
                     {"m0", &c.m0}, {"m1", &c.m1}, {"m2", &c.m2}, {"s0", &c.s0}, {"s1", &c.s1},
                     {"s2", &c.s2}, {"a0", &c.a0}, {"a1", &c.a1}, {"a2", &c.a2}, {"p1", &c.p1}})
                put(k, to_string(*v));
            put("beta_x", c.beta_x);
            put("beta", c.beta);
            put("gamma", c.gamma);
            put("gamma_x", c.gamma_x);
            put("leap_window", std::to_string(c.leap_window.first) + "," +
                                   std::to_string(c.leap_window.second));
            put("numbering", c.numbering == LeapNumbering::follows_next ? "follows_next"
                                                                         : "follows_previous");
            put("rahu_rd0", c.rahu_rd0 ? ordered_json(*c.rahu_rd0) : ordered_json(""));
        }
    }
    for (int i = 0; i <= 28; ++i) t.add({"moon_tab", i, to_string(moon_tab(i))});
    for (int i = 0; i <= 12; ++i) t.add({"sun_tab", i, to_string(sun_tab(i))});
    for (Planet p : planets()) {
        PlanetSpec s = planet_spec(p);
        std::string name = "planet " + s.name;
        t.add({name, "R", s.R});
        t.add({name, "pd0", s.pd0});
        t.add({name, "r", s.r});
        t.add({name, "birth_sign", to_string(s.birth_sign)});
        for (int i = 0; i <= 12; ++i) t.add({name, "equ " + std::to_string(i), to_string(planet_equ_tab(s, i))});
        for (int i = 0; i <= 27; ++i) t.add({name, "corr " + std::to_string(i), to_string(planet_corr_tab(s, i))});
    }
    for (int e = 1; e <= 5; ++e)
        t.add({"elements", e, std::string(element_name(element_from_index(e))) + " " +
                                  element_colour(element_from_index(e))});
    for (int i = 1; i <= 12; ++i) t.add({"animals", i, animal_name(i)});
    for (int i = 1; i <= 8; ++i) {
        const Trigram& g = trigram(i);
        t.add({"trigrams", i, std::string(g.tibetan) + " " + g.chinese + " " + g.direction + " " + g.element});
    }
    for (int i = 1; i <= 9; ++i) {
        const NineNumber& n = nine_number(i);
        t.add({"nine_numbers", i, std::string(n.colour) + " " + n.element + " " + n.direction});
    }
    for (int ci = 1; ci <= 60; ++ci) {
        ElementSet e = cycle_elements(ci);
        std::string v = std::string(element_name(e.power)) + "-" + animal_name(amod(ci, 12)) + " " +
                        element_name(e.life) + " " + element_name(e.body) + " " +
                        element_name(e.fortune) + " " + element_name(e.spirit);
        t.add({"sixty_cycle_elements", ci, v});
    }
    for (std::size_t i = 0; i < 27; ++i) {
        t.add({"mansions", static_cast<long>(i), mansion_names()[i].tibetan + " / " +
                                                   mansion_names()[i].sanskrit + " / " + mansion_elements()[i]});
        t.add({"yogas", static_cast<long>(i), yoga_names()[i].tibetan + " / " + yoga_names()[i].sanskrit});
    }
    for (std::size_t i = 0; i < 7; ++i)
        t.add({"karanas_changing", static_cast<long>(i + 1),
               changing_karana_names()[i].tibetan + " / " + changing_karana_names()[i].sanskrit});
    for (std::size_t i = 0; i < 4; ++i)
        t.add({"karanas_fixed", static_cast<long>(i + 1),
               fixed_karana_names()[i].tibetan + " / " + fixed_karana_names()[i].sanskrit});
    long pi = 0;
    for (const auto& n : prabhava_names())
        t.add({"prabhava", ++pi, std::string(n.tibetan) + " / " + n.sanskrit});
    render(t, format_of(o), out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tibetan calendar: conversion, almanac and astrological tables", "tibcal"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    Options o;
    if (const char* e = std::getenv("TIBCAL_TRADITION")) o.tradition = e;
    if (const char* e = std::getenv("TIBCAL_EPOCH")) o.epoch = e;
    app.add_option("--tradition", o.tradition,
                   "phugpa, tsurphu, mongolia, bhutan or karana (env TIBCAL_TRADITION)")
        ->capture_default_str();
    app.add_option("--epoch", o.epoch, "Epoch such as E1927 (env TIBCAL_EPOCH); default latest");
    app.add_option("--tradition-file", o.tradition_file, "JSON file with a custom tradition");
    app.add_flag("--a2-exact", o.a2_exact, "Use a2 = (1 + a1)/30 instead of 1/28");
    app.add_option("--format", o.format, "table, csv or jsonl")
        ->check(CLI::IsMember({"table", "csv", "jsonl"}))
        ->capture_default_str();

    DateInput conv_in, attr_in;
    auto* convert = app.add_subcommand("convert", "Convert a date in either direction");
    conv_in.add_to(convert);

    std::string losar_range, leap_range, planet_range, planet_detail;
    auto* losar_cmd = app.add_subcommand("losar", "New Year days");
    losar_cmd->add_option("years", losar_range, "Y or Y1..Y2")->required();
    auto* leap_cmd = app.add_subcommand("leap-months", "Leap months");
    leap_cmd->add_option("years", leap_range, "Y or Y1..Y2")->required();

    long alm_year = 0;
    std::optional<int> alm_month;
    bool alm_leap = false, alm_headers = false;
    auto* alm = app.add_subcommand("almanac", "Daily almanac values");
    alm->add_option("year", alm_year, "Tibetan year")->required();
    alm->add_option("--month", alm_month, "Single month 1..12");
    alm->add_flag("--leap", alm_leap, "The leap month with that number");
    alm->add_flag("--headers", alm_headers, "Monthly header records (csv and jsonl)");

    long sp_year = 0;
    std::vector<long> sp_extra = default_extra_longitudes();
    bool sp_trad = false;
    auto* sp = app.add_subcommand("special-days", "Days when the mean sun reaches set longitudes");
    sp->add_option("year", sp_year, "Tibetan year")->required();
    sp->add_option("--extra", sp_extra, "Extra longitudes in degrees")->delimiter(',');
    sp->add_flag("--traditional", sp_trad, "Use the month-by-month 6 ix/13 rule");

    auto* pl = app.add_subcommand("planets", "Planet longitudes");
    pl->add_option("dates", planet_range, "YYYY-MM-DD or YYYY-MM-DD..YYYY-MM-DD")->required();
    pl->add_option("--detail", planet_detail, "Show every step for one planet");

    bool attr_colours = false;
    auto* attr = app.add_subcommand("attributes", "Astrological attributes of a day");
    attr_in.add_to(attr);
    attr->add_flag("--colours", attr_colours, "Name elements by colour");

    std::string cmp_trad = "phugpa,tsurphu,mongolia,bhutan", cmp_range, cmp_show = "all";
    auto* cmp = app.add_subcommand("compare", "Compare traditions");
    cmp->add_option("--traditions", cmp_trad, "Comma separated list")->capture_default_str();
    cmp->add_option("years", cmp_range, "Y or Y1..Y2")->required();
    cmp->add_option("--show", cmp_show, "all, losar, leap or days")->capture_default_str();

    auto* tables_cmd = app.add_subcommand("tables", "Dump built-in constant tables");

    try {
        std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
        std::reverse(rev.begin(), rev.end());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (convert->parsed()) return cmd_convert(o, conv_in, out, err);
        if (losar_cmd->parsed()) return cmd_losar(o, losar_range, out);
        if (leap_cmd->parsed()) return cmd_leap(o, leap_range, out);
        if (alm->parsed()) return cmd_almanac(o, alm_year, alm_month, alm_leap, alm_headers, out);
        if (sp->parsed()) return cmd_special(o, sp_year, sp_extra, sp_trad, out);
        if (pl->parsed()) return cmd_planets(o, planet_range, planet_detail, out);
        if (attr->parsed()) return cmd_attributes(o, attr_in, attr_colours, out);
        if (cmp->parsed()) return cmd_compare(o, cmp_trad, cmp_range, cmp_show, out);
        if (tables_cmd->parsed()) return cmd_tables(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace tibcal
