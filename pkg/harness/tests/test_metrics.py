"""Weighted metric computation against hand-worked confusion matrices."""

import math
import random

import pytest

from snaptrain import Metrics, metrics_from_predictions


# Fixture confusion: labels a/b/c with supports 4/3/3.
# a: 3 correct, 1 predicted b | b: 2 correct, 1 predicted c | c: 3 correct.
Y_TRUE = [0, 0, 0, 0, 1, 1, 1, 2, 2, 2]
Y_PRED = [0, 0, 0, 1, 1, 1, 2, 2, 2, 2]


class TestHandComputedFixture:
    def test_weighted_metrics_match_hand_computation(self):
        m = metrics_from_predictions(Y_TRUE, Y_PRED, ("a", "b", "c"))
        # P: a=1, b=2/3, c=3/4 -> (4+2+2.25)/10; F1: a=6/7, b=2/3, c=6/7 -> 0.80
        assert round(m.precision, 2) == 82.50
        assert round(m.recall, 2) == 80.00
        assert round(m.f1, 2) == 80.00
        assert round(m.accuracy, 2) == 80.00

    def test_per_label_breakdown(self):
        m = metrics_from_predictions(Y_TRUE, Y_PRED, ("a", "b", "c"))
        assert m.per_label["a"]["support"] == 4
        assert round(m.per_label["a"]["precision"], 2) == 100.00
        assert round(m.per_label["a"]["recall"], 2) == 75.00
        assert round(m.per_label["b"]["f1"], 2) == 66.67
        assert round(m.per_label["c"]["precision"], 2) == 75.00
        assert round(m.per_label["c"]["recall"], 2) == 100.00


class TestEdgeCases:
    def test_all_correct_is_all_hundred(self):
        m = metrics_from_predictions([0, 1, 2], [0, 1, 2], ("a", "b", "c"))
        assert (m.precision, m.recall, m.f1, m.accuracy) == (100, 100, 100, 100)

    def test_constant_predictor_on_balanced_ten_classes(self):
        labels = tuple(f"l{i}" for i in range(10))
        y_true = [i for i in range(10) for _ in range(5)]
        y_pred = [3] * 50
        m = metrics_from_predictions(y_true, y_pred, labels)
        assert m.accuracy == pytest.approx(10.0)
        assert m.recall == pytest.approx(10.0)

    def test_absent_label_scores_zero_not_nan(self):
        m = metrics_from_predictions([0, 0, 1], [0, 0, 0], ("a", "b", "c"))
        assert m.per_label["b"]["recall"] == 0.0
        assert m.per_label["c"]["precision"] == 0.0
        assert not math.isnan(m.f1)

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            metrics_from_predictions([], [], ("a",))

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            metrics_from_predictions([0, 1], [0], ("a", "b"))


class TestInvariants:
    def test_accuracy_equals_weighted_recall_and_bounds(self):
        rng = random.Random(5)
        labels = ("a", "b", "c", "d")
        for _ in range(200):
            n = rng.randint(1, 60)
            y_true = [rng.randrange(4) for _ in range(n)]
            y_pred = [rng.randrange(4) for _ in range(n)]
            m = metrics_from_predictions(y_true, y_pred, labels)
            assert m.accuracy == m.recall
            # Independent long-way weighted recall.
            supports = {i: y_true.count(i) for i in range(4)}
            by_hand = math.fsum(
                supports[i] * (m.per_label[labels[i]]["recall"] / 100)
                for i in range(4)
            ) / n
            assert m.recall == pytest.approx(100 * by_hand, abs=1e-9)
            for value in (m.precision, m.recall, m.f1, m.accuracy):
                assert 0.0 <= value <= 100.0

    def test_metrics_bounds_enforced(self):
        with pytest.raises(ValueError):
            Metrics(
                precision=101.0, recall=50.0, f1=50.0, accuracy=50.0,
                model="m", variant="v", dataset="d",
            )
