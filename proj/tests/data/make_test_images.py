"""Regenerates the bundled test images from scikit-image's sample data.

All sources are public domain or CC0 (see skimage.data documentation).
"""
import os

import numpy as np
from skimage import data, transform, util
from PIL import Image

OUT = os.path.dirname(os.path.abspath(__file__))


def shrink(img, max_side):
    h, w = img.shape[:2]
    s = max_side / max(h, w)
    if s >= 1:
        return img
    out = transform.resize(img, (round(h * s), round(w * s)), anti_aliasing=True)
    return util.img_as_ubyte(out)


def main():
    Image.fromarray(data.camera()).save(os.path.join(OUT, "camera.png"))
    Image.fromarray(data.astronaut()).save(os.path.join(OUT, "astronaut.png"))
    Image.fromarray(shrink(data.coffee(), 320)).save(os.path.join(OUT, "coffee.png"))
    Image.fromarray(shrink(data.chelsea(), 320)).save(os.path.join(OUT, "chelsea.bmp"))
    Image.fromarray(shrink(data.coins(), 320)).save(os.path.join(OUT, "coins.png"))
    moon = shrink(data.moon(), 256).astype(np.uint16) * 257
    Image.fromarray(moon).save(os.path.join(OUT, "moon16.png"))
    Image.fromarray(shrink(data.brick(), 256)).save(os.path.join(OUT, "brick.png"))
    Image.fromarray(shrink(data.grass(), 256)).save(os.path.join(OUT, "grass.png"))
    Image.fromarray(shrink(data.gravel(), 256)).save(os.path.join(OUT, "gravel.bmp"))
    rocket = shrink(data.rocket(), 256)
    alpha = np.full(rocket.shape[:2] + (1,), 255, dtype=np.uint8)
    Image.fromarray(np.concatenate([rocket, alpha], axis=2)).save(
        os.path.join(OUT, "rocket_rgba.png"))


if __name__ == "__main__":
    main()
