import math

import catgate as cg


def main():
    pp = cg.default_params()
    assert abs(pp.K - 2 * math.pi * 12.5) < 1e-12
    np_, nm_ = cg.normalization_constants(0.5 + 0j)
    assert abs(np_ - (2 + 2 * math.exp(-0.5))) < 1e-12
    assert abs(nm_ - (2 - 2 * math.exp(-0.5))) < 1e-12

    assert abs(cg.theta_fresnel(0.0, 1.0) - 0.786032) < 1e-5

    g = cg.named_gate("T")
    assert g.U.shape == (2, 2)
    assert abs(g.theta_ideal - 7 * math.pi / 8) < 1e-12

    p = cg.random_ansatz(6, 0.0, 0.0, 1.0, 42)
    err = cg.pretrain(p, 2.31253, 4000, 501)
    assert err < 1e-2

    path = cg.forward_grid(p, 201)
    fields = cg.omega_from_path(path)
    assert len(fields.ox) == 201
    theta = cg.geometric_theta(path)
    assert abs(theta - 3.1684) < 0.05

    f0 = cg.fidelity_of_params(p, g, 200)
    assert 0.85 < f0 <= 1.0

    cfg = cg.TrainConfig()
    cfg.n_slices = 60
    cfg.sweeps1 = 2
    cfg.sweeps2 = 0
    cfg.pretrain_iters = 4000
    res = cg.train(g, cfg)
    assert res.sweeps_run == 2
    assert len(res.history.fidelity) == 2

    ck = "tmp_smoke.checkpoint.json"
    meta = cg.CheckpointMeta()
    meta.gate = "T"
    cg.save_checkpoint(ck, res.params, meta)
    p2, meta2 = cg.load_checkpoint(ck)
    assert meta2.gate == "T"
    assert p2.W1 == res.params.W1

    f = cg.toffoli_fidelity(g.U, cg.named_gate("Tdag").U, cg.named_gate("H").U,
                            cg.named_gate("X").U)
    assert f > 1 - 1e-10

    print("python smoke ok")


if __name__ == "__main__":
    main()
