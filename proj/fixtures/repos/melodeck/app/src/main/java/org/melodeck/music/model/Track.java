package org.melodeck.music.model;

public class Track {
    private final long id;
    private final String title;
    private final String artist;
    private final String album;
    private final String path;
    private final long duration;

    public Track(long id, String title, String artist, String album, String path, long duration) {
        this.id = id;
        this.title = title;
        this.artist = artist;
        this.album = album;
        this.path = path;
        this.duration = duration;
    }

    public long getId() { return id; }
    public String getTitle() { return title; }
    public String getArtist() { return artist; }
    public String getAlbum() { return album; }
    public String getPath() { return path; }
    public long getDuration() { return duration; }
}
