# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from dataclasses import dataclass

from ..errors import V2VError

CLIP_LEN = 16


def sample_clips(video_len, stride, clip_len=CLIP_LEN):
    """Windows (start, end) at start = 0, stride, 2 * stride, ... inside the video."""
    if stride < 1 or clip_len < 1:
        raise V2VError(
            "\n Clip stride and length must be >= 1, got {} and {} \n".format(
                stride, clip_len
            )
        )
    return [
        (start, start + clip_len)
        for start in range(0, video_len - clip_len + 1, stride)
    ]


def cover_clips(video_len, clip_len=CLIP_LEN):
    """
    Non-overlapping windows covering every frame. A remainder is covered
    by one more window aligned to the video end.
    """
    windows = sample_clips(video_len, clip_len, clip_len)
    if windows and windows[-1][1] < video_len:
        windows.append((video_len - clip_len, video_len))
    return windows


@dataclass
class ClipSampler:
    video_len: int
    stride: int
    clip_len: int = CLIP_LEN

    def windows(self):
        return sample_clips(self.video_len, self.stride, self.clip_len)

    def __len__(self):
        return len(self.windows())
