import os
import sys

import _disclocus as dl


def expect(cond, what):
    if not cond:
        print("FAIL:", what)
        sys.exit(1)
    print("ok:", what)


def main():
    gb = dl.groebner("ring x y over q\nx^2 - y\ny^2 - x*y")
    expect(len(gb) >= 2, "groebner basis of a small ideal")

    dual = dl.dual("ring x0 x1 x2 over q\nx0*x2 - x1^2", "q")
    expect(dual == ["L1^2 - 4*L0*L2"], "dual of the smooth conic")

    web = "\n".join([
        "ring x0 x1 x2 over q",
        "section: x0^2",
        "section: x1^2",
        "section: x2^2",
    ])
    rep = dl.discriminant(web)
    expect(rep["codegree"] == 3, "coordinate web codegree")
    expect(rep["equation"] == "L0*L1*L2", "coordinate web equation")
    expect(len(rep["hyperplanes"]) == 3, "three hyperplane components")

    expect(dl.milnor("x^3 + y^3", ["x", "y"]) == 4, "milnor number of the m=3 cone point")
    expect(dl.milnor("x^2", ["x", "y"]) is None, "non-isolated singularity reported")

    pen = dl.pencil_verify(web, 42)
    expect(pen["ok"] and pen["identity"] and pen["cn"] == 3, "pencil identity on the web")

    wr = dl.wronskian_branch("s^3", "t^3", ["s", "t"], "q")
    expect(wr["codegree"] == 2, "two branch values for the two-monomial pencil")

    expect(dl.cn_jet_pn(2, 3) == 12, "jet chern number on the plane")
    expect(dl.c2_jet_surface(11, -2, 4) == 19, "surface jet chern number")
    expect(dl.c2_jet_cyclic(2, 3)[0] == 30, "cyclic cover chern number")
    expect(dl.dual_degree_plane_curve(6, 4) == 18, "dual degree of the branch sextic")

    fixdir = os.environ.get("DLOCUS_FIXTURES", "fixtures")
    rep = dl.run_fixture(os.path.join(fixdir, "cone-web.fix"))
    expect(rep["pass"], "cone web fixture passes")
    print("python smoke: all checks passed")


if __name__ == "__main__":
    main()
