package com.tunebox.player.library;

public class Song {
    private final long id;
    private final String title;
    private final String artist;
    private final String album;
    private final String path;
    private final int durationMs;

    public Song(long id, String title, String artist, String album, String path, int durationMs) {
        this.id = id;
        this.title = title;
        this.artist = artist;
        this.album = album;
        this.path = path;
        this.durationMs = durationMs;
    }

    public long getId() { return id; }
    public String getTitle() { return title; }
    public String getArtist() { return artist; }
    public String getAlbum() { return album; }
    public String getPath() { return path; }
    public int getDurationMs() { return durationMs; }
}
