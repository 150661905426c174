// Python module _tibcal.  Exact values come back as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tibcal/almanac.hpp"
#include "tibcal/astro.hpp"
#include "tibcal/cli.hpp"
#include "tibcal/cycles.hpp"
#include "tibcal/days.hpp"
#include "tibcal/planets.hpp"

namespace py = pybind11;
using namespace tibcal;

namespace {

py::object fraction(const Rational& x) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(py::int_(py::str(x.get_num().get_str())), py::int_(py::str(x.get_den().get_str())));
}

TraditionConfig config(const std::string& tradition, const std::string& epoch, bool a2_exact) {
    TraditionConfig c = get_tradition(tradition, epoch);
    return a2_exact ? with_exact_a2(c) : c;
}

py::dict tibetan_dict(const TibetanDate& t, DayStatus s) {
    py::dict d;
    d["year"] = t.month.year;
    d["month"] = t.month.month;
    d["leap_month"] = t.month.leap;
    d["day"] = t.day;
    d["leap_day"] = t.leap_day;
    d["status"] = status_name(s);
    d["text"] = t.str(s);
    return d;
}

std::string iso(long jd) { return gregorian_from_jd(jd).str(); }

}  // namespace

PYBIND11_MODULE(_tibcal, m) {
    m.doc() = "Exact Tibetan calendar computations";

    auto tr = py::arg("tradition") = "phugpa";
    auto ep = py::arg("epoch") = "";
    auto a2 = py::arg("a2_exact") = false;

    m.def("traditions", &tradition_ids);
    m.def("epochs", &tradition_epochs, py::arg("tradition"));

    m.def("jd_from_gregorian", &jd_from_gregorian, py::arg("year"), py::arg("month"),
          py::arg("day"));
    m.def("jd_from_julian", &jd_from_julian, py::arg("year"), py::arg("month"), py::arg("day"));
    m.def(
        "gregorian_from_jd",
        [](long jd) {
            CivilDate c = gregorian_from_jd(jd);
            return py::make_tuple(c.year, c.month, c.day);
        },
        py::arg("jd"));
    m.def("day_of_week", &day_of_week, py::arg("jd"), "0 = Saturday");

    m.def(
        "to_tibetan",
        [](long jd, const std::string& t, const std::string& e, bool x) {
            TraditionConfig c = config(t, e, x);
            TibetanDate d = tibetan_from_jd(c, jd);
            return tibetan_dict(d, jd_from_tibetan(c, d).status);
        },
        py::arg("jd"), tr, ep, a2);
    m.def(
        "from_tibetan",
        [](const std::string& text, const std::string& t, const std::string& e, bool x) {
            TraditionConfig c = config(t, e, x);
            DayResult r = jd_from_tibetan(c, parse_tibetan_date(text));
            return py::make_tuple(r.jd, status_name(r.status));
        },
        py::arg("date"), tr, ep, a2, "date as 'Y-MM[L]-DD[a]'; returns (jd, status)");
    m.def(
        "losar", [](long Y, const std::string& t, const std::string& e) {
            return losar(config(t, e, false), Y);
        },
        py::arg("year"), tr, ep);
    m.def(
        "leap_month",
        [](long Y, const std::string& t, const std::string& e) {
            return leap_month_of_year(config(t, e, false), Y);
        },
        py::arg("year"), tr, ep);
    m.def(
        "month_count",
        [](long Y, int M, bool leap, const std::string& t, const std::string& e) {
            return month_count(config(t, e, false), MonthLabel{Y, M, leap});
        },
        py::arg("year"), py::arg("month"), py::arg("leap") = false, tr, ep);
    m.def(
        "true_date",
        [](long d, long n, const std::string& t, const std::string& e, bool x) {
            return fraction(true_date(config(t, e, x), d, n));
        },
        py::arg("day"), py::arg("n"), tr, ep, a2);
    m.def(
        "mean_sun",
        [](long d, long n, const std::string& t, const std::string& e) {
            return fraction(frac(mean_sun(config(t, e, false), d, n)));
        },
        py::arg("day"), py::arg("n"), tr, ep);
    m.def(
        "year_name", [](long Y) { return year_name(Y).label(); }, py::arg("year"));

    m.def(
        "day_record",
        [](long jd, const std::string& t, const std::string& e) {
            AlmanacDayRecord r = day_record(config(t, e, false), jd);
            py::dict d;
            d["jd"] = r.jd;
            d["gregorian"] = iso(r.jd);
            d["tibetan"] = tibetan_dict(r.date, r.status);
            d["true_weekday"] = fraction(r.true_weekday);
            d["moon"] = fraction(r.moon_long_day_start);
            d["mansion"] = r.mansion;
            d["true_sun"] = fraction(r.true_sun);
            d["yoga"] = r.yoga;
            d["karana"] = r.karana.half_day;
            d["mean_sun"] = r.mean_sun ? fraction(*r.mean_sun) : py::none();
            return d;
        },
        py::arg("jd"), tr, ep);
    m.def(
        "special_days",
        [](long Y, const std::string& t, const std::string& e) {
            py::list out;
            for (const auto& s : special_days(config(t, e, false), Y)) {
                py::dict d;
                d["kind"] = special_kind_name(s.kind);
                d["longitude"] = fraction(s.longitude);
                d["date"] = fraction(s.date);
                d["jd"] = s.jd;
                d["gregorian"] = iso(s.jd);
                out.append(d);
            }
            return out;
        },
        py::arg("year"), tr, ep);
    m.def(
        "planets",
        [](long jd) {
            py::dict d;
            long g = general_day(jd);
            for (Planet p : tibcal::planets()) {
                PlanetSpec s = planet_spec(p);
                d[py::str(s.name)] = fraction(planet_position(s, g).fast);
            }
            return d;
        },
        py::arg("jd"), "fast longitudes in revolutions");
    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "tibcal");
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "returns (exit code, stdout, stderr)");
}
