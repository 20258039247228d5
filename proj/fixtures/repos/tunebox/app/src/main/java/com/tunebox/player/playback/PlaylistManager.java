package com.tunebox.player.playback;

import java.util.ArrayList;
import java.util.List;
import java.util.Random;

import com.tunebox.player.library.Song;

public class PlaylistManager {
    private final List<Song> queue = new ArrayList<>();
    private final Random random = new Random();
    private int currentIndex = -1;
    private boolean repeatPlaylist;

    public void setQueue(List<Song> songs) {
        queue.clear();
        queue.addAll(songs);
        currentIndex = songs.isEmpty() ? -1 : 0;
    }

    public void addSong(Song song) {
        queue.add(song);
    }

    public void moveSong(int from, int to) {
        Song song = queue.remove(from);
        queue.add(to, song);
    }

    public Song nextSong() {
        if (queue.isEmpty()) return null;
        currentIndex++;
        if (currentIndex >= queue.size()) {
            if (!repeatPlaylist) return null;
            currentIndex = 0;
        }
        return queue.get(currentIndex);
    }

    public Song randomSong() {
        if (queue.isEmpty()) return null;
        currentIndex = random.nextInt(queue.size());
        return queue.get(currentIndex);
    }

    public void setRepeatPlaylist(boolean repeat) {
        repeatPlaylist = repeat;
    }
}
