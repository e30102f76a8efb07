# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np

indent = "  "


def _print_times(forward_time, backward_time, iter_time, n_iter):
    update_time = iter_time - forward_time - backward_time
    iterPerSec = n_iter / iter_time if iter_time > 0 else float("inf")

    for name, value in (
        ("Forward time  ", forward_time),
        ("Backward time ", backward_time),
        ("Update time   ", update_time),
    ):
        share = round(value / iter_time * 100, 2) if iter_time > 0 else 0.0
        print(indent, name, ":", value, "sec", indent, "[{} %]".format(share))

    if iterPerSec >= 1:
        print(
            indent,
            "Iteration time :",
            iter_time,
            "sec",
            indent,
            "[{} iter/sec]".format(round(iterPerSec, 2)),
        )
    else:
        print(
            indent,
            "Iteration time :",
            iter_time,
            "sec",
            indent,
            "[{} sec/iter]".format(round(iter_time / n_iter, 2)),
        )
    print(" ")


def _print_results(run_name, loss_final, loss_best, best_iter, n_iter, n_epochs, seed):
    print("\nResults: '{}'".format(run_name), " ")
    print(indent, "Final loss:", loss_final, " ")
    print(indent, "Best loss :", loss_best, "at iteration", best_iter, " ")
    print(indent, "Iterations:", n_iter, "in", n_epochs, "epochs", " ")
    print(" ")
    print(indent, "Random seed:", seed, " ")
    print(" ")


def print_info(
    verbosity,
    run_name,
    loss_final,
    loss_best,
    best_iter,
    forward_times,
    backward_times,
    iter_times,
    n_iter,
    n_epochs,
    seed,
):
    forward_time = np.array(forward_times).sum()
    backward_time = np.array(backward_times).sum()
    iter_time = np.array(iter_times).sum()

    if "print_results" in verbosity:
        _print_results(
            run_name, loss_final, loss_best, best_iter, n_iter, n_epochs, seed
        )

    if "print_times" in verbosity and n_iter > 0:
        _print_times(forward_time, backward_time, iter_time, n_iter)
