import json
import logging

import numpy as np
import pytest

from pipeline_evolution.utils.logging import cast_unsafe


def test_not_serializable_fails():
    logger = logging.getLogger("the-logger")
    extra = dict(bad_key={"sets aren't serializable"})

    with pytest.raises(AssertionError, match="the-logger"):
        logger.info("This should fail!", extra=extra)


def test_cast_unsafe():
    obj = {1: np.arange(3), "nested": (np.float32(0.5), [np.bool_(True), None]), "plain": "text"}

    actual = cast_unsafe(obj)

    assert actual == {"1": [0, 1, 2], "nested": [0.5, [True, None]], "plain": "text"}
    json.dumps(actual)
