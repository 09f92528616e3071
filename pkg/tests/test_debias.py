"""
Tests for cooccurrence filtering, answer capping, blocklists and masking.
"""

from collections import Counter

import pytest
from hypothesis import HealthCheck, given, settings

from tests.strategies import answer_lists, seeds


def _answer_samples(make_sample, answers):
    return [
        make_sample(sample_id=f"s{i}", answer=a, candidates=(a,), supports=(("d", a),), gold_paths=(("d",),))
        for i, a in enumerate(answers)
    ]


class TestCooccurrence:
    """Tests for the cooccurrence table and filter."""

    def test_counts_pairs_once_per_sample(self, make_sample):
        from hop_toolkit.debias import build_cooccurrence

        samples = [
            make_sample(sample_id="a", supports=(("d1", "India"), ("d1b", "x"))),
            make_sample(sample_id="b", supports=(("d1", "India"),)),
        ]
        table = build_cooccurrence(samples)
        assert table.get("d1", "India") == 2
        assert table.get("d1", "Iran") == 0
        assert table.n_samples == 2

    def test_records_sorted_by_count(self, make_sample):
        from hop_toolkit.debias import CooccurrenceTable, build_cooccurrence

        samples = [
            make_sample(sample_id="a", supports=(("d1", "x"), ("d2", "y"))),
            make_sample(sample_id="b", supports=(("d1", "x"),)),
        ]
        records = build_cooccurrence(samples).to_records()
        assert records[0] == {"doc_id": "d1", "candidate": "India", "count": 2, "proportion": 1.0}
        assert records[1]["count"] == 1
        assert CooccurrenceTable.from_records(records).get("d2", "India") == 1

    def test_filter_threshold_is_strict(self, make_sample):
        """A pair counted exactly at the threshold survives; one above does not."""
        from hop_toolkit.debias import CooccurrenceTable, filter_by_cooccurrence

        sample = make_sample(supports=(("d1", "Iran"),))
        at = CooccurrenceTable(counts={("d1", "Iran"): 20})
        above = CooccurrenceTable(counts={("d1", "Iran"): 21})
        assert filter_by_cooccurrence([sample], at, threshold=20) == [sample]
        assert filter_by_cooccurrence([sample], above, threshold=20) == []

    def test_filter_checks_every_candidate(self, make_sample):
        """Wrong candidates with a strong cue also remove the sample."""
        from hop_toolkit.debias import CooccurrenceTable, filter_by_cooccurrence

        sample = make_sample(supports=(("d1", "x"),))
        table = CooccurrenceTable(counts={("d1", "Pakistan"): 50})
        assert filter_by_cooccurrence([sample], table) == []


class TestAnswerCap:
    """Tests for cap_answer_frequency."""

    def test_fixed_point_limit(self, make_sample):
        """9000 unique answers and 10 answers x 100 settle at 9 per answer."""
        from hop_toolkit.debias import cap_answer_frequency

        answers = [f"u{i}" for i in range(9000)]
        for j in range(10):
            answers.extend([f"f{j}"] * 100)
        kept = cap_answer_frequency(_answer_samples(make_sample, answers), cap=0.001)
        counts = Counter(s.answer for s in kept)
        assert len(kept) == 9090
        assert max(counts.values()) == 9
        assert max(counts.values()) <= 0.001 * len(kept)

    @settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
    @given(answer_lists(), seeds)
    def test_no_answer_above_cap(self, make_sample, answers, seed):
        from hop_toolkit.debias import cap_answer_frequency

        cap = 0.05
        kept = cap_answer_frequency(_answer_samples(make_sample, answers), cap=cap, seed=seed)
        counts = Counter(s.answer for s in kept)
        assert max(counts.values()) <= max(1, cap * len(kept) + 1e-6)

    def test_survivors_keep_input_order(self, make_sample):
        from hop_toolkit.debias import cap_answer_frequency

        samples = _answer_samples(make_sample, ["a"] * 5 + ["b", "c", "d"])
        kept = cap_answer_frequency(samples, cap=0.25, seed=1)
        ids = [s.id for s in kept]
        assert ids == sorted(ids, key=lambda i: int(i[1:]))
        assert cap_answer_frequency(samples, cap=0.25, seed=1) == kept

    def test_small_split_keeps_one_per_answer(self, make_sample):
        """A cap below one sample is floored at one per answer."""
        from hop_toolkit.debias import cap_answer_frequency

        samples = _answer_samples(make_sample, ["a"] * 5 + ["b", "c", "d", "e", "f"])
        kept = cap_answer_frequency(samples, cap=0.001, seed=4)
        counts = Counter(s.answer for s in kept)
        assert set(counts) == {"a", "b", "c", "d", "e", "f"}
        assert set(counts.values()) == {1}

    @pytest.mark.slow
    def test_skewed_split_of_ten_thousand(self, make_sample):
        """Zipf-distributed answers: every answer keeps min(count, limit) samples."""
        import numpy as np

        from hop_toolkit.debias import cap_answer_frequency

        draws = np.random.default_rng(11).zipf(1.3, size=10_000)
        answers = [f"a{int(d)}" for d in draws]
        before = Counter(answers)
        kept = cap_answer_frequency(_answer_samples(make_sample, answers), cap=0.001, seed=2)
        after = Counter(s.answer for s in kept)

        limit = max(after.values())
        assert limit <= max(1, 0.001 * len(kept) + 1e-6)
        assert set(after) == set(before)
        assert all(after[a] == min(n, limit) for a, n in before.items())

    def test_invalid_cap(self, make_sample):
        from hop_toolkit.debias import cap_answer_frequency
        from hop_toolkit.exceptions import ConfigError

        with pytest.raises(ConfigError):
            cap_answer_frequency([make_sample()], cap=0)


class TestBlocklist:
    """Tests for apply_blocklist."""

    def test_removes_documents_and_chains(self):
        from hop_toolkit.corpus import Document
        from hop_toolkit.debias import apply_blocklist
        from hop_toolkit.induce import Sample
        from hop_toolkit.kbmodel import Query

        sample = Sample(
            id="s",
            query=Query("Mumbai", "country"),
            answer="India",
            candidates=("India",),
            supports=(
                Document.from_text("d1", "", "India", "india"),
                Document.from_text("d2", "", "India", "mumbai"),
            ),
            gold_paths=(("d1",), ("d2",)),
        )
        kept = apply_blocklist([sample], {"india"})
        assert kept[0].support_ids == ("d2",)
        assert kept[0].gold_paths == (("d2",),)
        assert apply_blocklist([sample], {"india", "mumbai"}) == []
        assert apply_blocklist([sample], set()) == [sample]

    def test_entities_from_corpus_mapping(self, make_sample):
        """Supports without an entity are matched through the corpus mapping."""
        from hop_toolkit.debias import apply_blocklist

        sample = make_sample(
            supports=(("d1", "Mumbai is in India ."), ("d2", "Goa is in India ."), ("d3", "Iran .")),
            gold_paths=(("d1",), ("d2",)),
            candidate_paths={"India": 2, "Iran": 1, "Pakistan": 0},
        )
        assert apply_blocklist([sample], {"mumbai"}) == [sample]

        kept = apply_blocklist([sample], {"mumbai"}, {"d1": "mumbai", "d2": "goa"})
        assert kept[0].support_ids == ("d2", "d3")
        assert kept[0].gold_paths == (("d2",),)
        assert kept[0].candidate_paths == {"India": 1, "Iran": 1, "Pakistan": 0}


class TestMasking:
    """Tests for candidate masking."""

    def test_masks_every_mention(self, make_sample):
        from hop_toolkit.debias import PLACEHOLDER_PATTERN, mask_sample

        sample = make_sample(supports=(("d1", "Mumbai is in india ."), ("d2", "Iran borders Pakistan .")))
        masked, mask_map = mask_sample(sample, seed=3)
        assert masked.masked
        assert all(PLACEHOLDER_PATTERN.match(c) for c in masked.candidates)
        assert masked.answer == mask_map.forward["India"]
        assert len(set(masked.candidates)) == 3
        body = masked.supports[0].body
        assert body[-2] == mask_map.forward["India"]
        assert "india" not in " ".join(body).lower().split()

    def test_round_trip_restores_original(self, make_sample):
        """mask then unmask gives back the original record, casing included."""
        from hop_toolkit.debias import mask_sample, unmask_sample

        sample = make_sample(supports=(("d1", "Mumbai is in INDIA ."), ("d2", "Iran borders Pakistan .")))
        masked, mask_map = mask_sample(sample, seed=9)
        assert mask_map.variants
        assert unmask_sample(masked).to_dict() == sample.to_dict()

    @settings(deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
    @given(seeds)
    def test_round_trip_any_seed(self, make_sample, seed):
        from hop_toolkit.debias import mask_sample, unmask_sample

        sample = make_sample()
        masked, _ = mask_sample(sample, pool_size=10, seed=seed)
        assert unmask_sample(masked).to_dict() == sample.to_dict()

    def test_raw_text_round_trip(self, temp_dir, make_sample):
        """Masking splices placeholders into the original text; unmasking restores it exactly."""
        from hop_toolkit.debias import mask_sample, unmask_sample
        from hop_toolkit.io import read_dataset, write_dataset

        sample = make_sample(supports=(
            ("d1", "Mumbai,  in INDIA.\n\nNear  Iran."),
            ("d2", "(Pakistan)\tborders india,  and Iran"),
        ))
        masked, mask_map = mask_sample(sample, seed=5)
        f = mask_map.forward
        assert masked.supports[0].text == f"Mumbai,  in {f['India']}.\n\nNear  {f['Iran']}."
        assert masked.supports[1].text == f"({f['Pakistan']})\tborders {f['India']},  and {f['Iran']}"

        path = temp_dir / "masked.jsonl"
        write_dataset(path, [masked])
        restored = unmask_sample(read_dataset(path)[0])
        assert restored.to_dict() == sample.to_dict()

    @pytest.mark.slow
    def test_thousand_samples(self, make_sample):
        """Maps are injective into the pool and every sample unmasks to itself."""
        import numpy as np

        from hop_toolkit.debias import mask_sample, placeholder_pool, unmask_sample

        pool = set(placeholder_pool(100))
        fillers = ["the", "river", "of", "near", "and"]
        rng = np.random.default_rng(7)
        for i in range(1000):
            n = int(rng.integers(1, 101))
            candidates = [f"Place{j}" if j % 3 else f"Port Place{j}" for j in range(n)]
            supports = []
            for d in range(3):
                words = list(rng.choice(candidates + fillers, size=8))
                words = [w + ("," if k % 4 == 1 else "") for k, w in enumerate(words)]
                supports.append((f"d{d}", "  ".join(words[:4]) + ".\n\n" + " ".join(words[4:])))
            sample = make_sample(
                sample_id=f"s{i}",
                answer=candidates[0],
                candidates=candidates,
                supports=supports,
                gold_paths=(("d0",),),
            )
            masked, mask_map = mask_sample(sample, pool_size=100, seed=i)
            assert len(set(mask_map.forward.values())) == n
            assert set(mask_map.forward.values()) <= pool
            assert unmask_sample(masked).to_dict() == sample.to_dict()

    def test_placeholders_differ_across_samples(self, make_sample):
        """Per-sample streams give candidates different placeholders across samples."""
        from hop_toolkit.debias import mask_sample

        maps = [mask_sample(make_sample(sample_id=f"s{i}"), seed=0)[1].forward["India"] for i in range(20)]
        assert len(set(maps)) > 1

    def test_errors(self, make_sample):
        from hop_toolkit.debias import mask_sample
        from hop_toolkit.exceptions import MaskingError

        sample = make_sample()
        masked, _ = mask_sample(sample)
        with pytest.raises(MaskingError):
            mask_sample(masked)
        with pytest.raises(MaskingError):
            mask_sample(sample, pool_size=2)
        with pytest.raises(MaskingError):
            mask_sample(make_sample(supports=(("d1", "MASK7 India"),)))

    def test_unmask_prediction(self):
        from hop_toolkit.debias import MaskMap, unmask_prediction
        from hop_toolkit.exceptions import ScoringError

        mask_map = MaskMap(forward={"India": "MASK3"})
        assert unmask_prediction("MASK3", mask_map) == "India"
        assert unmask_prediction("India", None) == "India"
        with pytest.raises(ScoringError):
            unmask_prediction("MASK4", mask_map)
