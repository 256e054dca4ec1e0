#include "lutzlab/runner.hpp"

#include <doctest.h>

using namespace lutzlab;

TEST_CASE("verify reports are byte-identical across runs with the same seed") {
    VerifyParams p;
    p.dim = 2;
    p.seed = 42;
    std::string a = run_verify("lutz-confoliation", p).dump();
    std::string b = run_verify("lutz-confoliation", p).dump();
    CHECK(a == b);

    std::string t1 = run_trace("twist-along-circle", 2, 42).dump();
    std::string t2 = run_trace("twist-along-circle", 2, 42).dump();
    CHECK(t1 == t2);
}

TEST_CASE("unknown construction throws") {
    VerifyParams p;
    CHECK_THROWS_AS(run_verify("no-such-construction", p), UnknownConstruction);
    CHECK_THROWS_AS(run_trace("no-such-recipe", 2, 42), UnknownConstruction);
}

TEST_CASE("report schema essentials") {
    VerifyParams p;
    p.dim = 1;
    ReportDocument doc = run_verify("standard-tube", p);
    CHECK(doc.body["tool"] == "lutzlab");
    CHECK(doc.body["seed"] == 42);
    CHECK(doc.body.contains("checks"));
    CHECK(doc.body.contains("certificates"));
    CHECK(doc.body["all_passed"] == true);
    for (const auto& c : doc.body["checks"]) {
        std::string s = c["status"];
        CHECK((s == "symbolic-pass" || s == "grid-pass" || s == "fail" || s == "reported"));
    }
}

TEST_CASE("plot: locus slice marks a single point; empty slice is blank") {
    PlotRequest req;
    req.construction = "lutz-confoliation";
    req.params.dim = 2;
    req.axis_x = "r1";
    req.axis_y = "r2";
    SlicePlot sp = run_plot(req);
    CHECK(sp.locus_points == 1);
    CHECK(sp.svg.find("<svg") == 0);
    CHECK(sp.csv.rfind("x,y,value", 0) == 0);

    // a slice pinned away from the locus has no marked point
    PlotRequest req2 = req;
    req2.fixed = {{"r2", 0.2}};
    req2.axis_y = "th1";
    SlicePlot sp2 = run_plot(req2);
    CHECK(sp2.locus_points == 0);

    PlotRequest bad = req;
    bad.axis_y = "nope";
    CHECK_THROWS_AS(run_plot(bad), BadSlice);
}

TEST_CASE("plots are deterministic") {
    PlotRequest req;
    req.construction = "giroux-domain";
    req.params.dim = 2;
    req.axis_x = "s1";
    req.axis_y = "s2";
    SlicePlot a = run_plot(req);
    SlicePlot b = run_plot(req);
    CHECK(a.svg == b.svg);
    CHECK(a.csv == b.csv);
}
