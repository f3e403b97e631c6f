import npoly


def slopes(polygon):
    return polygon.slopes()


def test_hodge_polygon_of_triangle():
    P = npoly.direct_sum(npoly.Polytope.standard([(2, 0)]), npoly.Polytope.standard([(3, 0)]))
    hp = npoly.hodge_polygon(P)
    assert slopes(hp) == ["0", "1/3", "1/2", "2/3", "5/6", "7/6"]
    assert P.lattice_volume() == 6
    assert P.denominator() == 6


def test_polygon_algebra():
    a = npoly.ConvexPolygon.from_slopes(["0", "1/2"])
    b = npoly.ConvexPolygon.from_slopes(["0", "1/3", "2/3"])
    assert slopes(npoly.product(a, b)) == ["0", "1/3", "1/2", "2/3", "5/6", "7/6"]
    assert npoly.juxtapose(a, a).length() == 4
    assert npoly.dominates(a, a)
    c = npoly.ConvexPolygon.from_slopes(["0", "1/3", "2/3"])
    d = npoly.ConvexPolygon.from_slopes(["0", "1/2", "1/2"])
    assert npoly.max_deviation(c, d) == "1/6"


def test_lambda_and_hs():
    assert npoly.lambda_stickelberger(1, 3, 2) == "1/2"
    hs = npoly.hs_polygon(npoly.Polytope.standard([(1, 0)]), ["1/3"], 1)
    assert slopes(hs) == ["2/3"]
    closed = npoly.hs_1d_closed_form(3, 2, 1, 3, 2)
    assert slopes(closed) == ["1/6", "1/4", "1/2", "3/4", "5/6"]


def test_gnp():
    assert npoly.y_values(3, 0, 5) == [0, 2, 4]
    g = npoly.gnp_1d(3, 0, 5)
    assert g.vertices() == [(0, "0"), (1, "0"), (2, "1/2"), (3, "1")]
    assert slopes(npoly.hp_1d(3, 0)) == ["0", "1/3", "2/3"]


def test_oracle_kloosterman():
    res = npoly.newton_polygon(5, 1, [([1], 1), ([-1], 1)])
    assert slopes(res["np"]) == ["0", "1"]
    assert res["dominates_bound"]
    assert res["degree"] == 2


def test_epsilon_set():
    P = npoly.Polytope([[2]], [(1, 1)])
    assert P.epsilon_set() == [[0], [1]]
    assert P.half_points() == [[0], [1]]
