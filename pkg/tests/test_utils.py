import os
import threading
from unittest import TestCase, main
from unittest.mock import patch

import chaincalc.utils as utils


class TestUtils(TestCase):
    def setUp(self):
        utils.get_thread_count.cache_clear()

    def tearDown(self):
        os.environ.pop(utils.THREADS_ENV, None)
        utils.get_thread_count.cache_clear()

    def test_thread_count_default(self):
        os.environ.pop(utils.THREADS_ENV, None)
        self.assertEqual(utils.get_thread_count(), 1)

    @patch.dict(os.environ, {"CHAINCALC_THREADS": "4"})
    def test_thread_count_from_env(self):
        self.assertEqual(utils.get_thread_count(), 4)

    @patch.dict(os.environ, {"CHAINCALC_THREADS": "many"})
    def test_thread_count_malformed(self):
        with self.assertLogs("chaincalc.utils", level="WARNING") as logs:
            self.assertEqual(utils.get_thread_count(), 1)
        self.assertIn("not an integer", logs.output[0])

    @patch.dict(os.environ, {"CHAINCALC_THREADS": "0"})
    def test_thread_count_not_positive(self):
        with self.assertLogs("chaincalc.utils", level="WARNING"):
            self.assertEqual(utils.get_thread_count(), 1)

    def test_thread_count_is_read_once(self):
        with patch.dict(os.environ, {"CHAINCALC_THREADS": "2"}):
            self.assertEqual(utils.get_thread_count(), 2)
        with patch.dict(os.environ, {"CHAINCALC_THREADS": "8"}):
            self.assertEqual(utils.get_thread_count(), 2)

    def test_parse_levels(self):
        self.assertEqual(utils.parse_levels("3..8"), (3, 8))
        self.assertEqual(utils.parse_levels(" 2 .. 4 "), (2, 4))
        self.assertEqual(utils.parse_levels("5"), (5, 5))

    def test_parse_levels_errors(self):
        for text in ("", "a..b", "3..", "-1..2", "3-8", "8..3"):
            with self.subTest(text=text):
                with self.assertRaises(ValueError):
                    utils.parse_levels(text)

    def test_run_ordered_serial(self):
        self.assertEqual(utils.run_ordered([lambda: 1, lambda: 2]), [1, 2])
        self.assertEqual(utils.run_ordered([]), [])

    def test_run_ordered_pool(self):
        names = utils.run_ordered([lambda i=i: (i, threading.current_thread().name) for i in range(8)], 4)
        self.assertEqual([i for i, _ in names], list(range(8)))

    def test_run_ordered_propagates_errors(self):
        def boom():
            raise RuntimeError("boom")

        with self.assertRaises(RuntimeError):
            utils.run_ordered([lambda: 1, boom], 2)

    def test_utc_timestamp(self):
        stamp = utils.utc_timestamp()
        self.assertTrue(stamp.endswith("+00:00"))
        self.assertEqual(len(stamp), len("2024-01-01T00:00:00+00:00"))


if __name__ == "__main__":
    main()
